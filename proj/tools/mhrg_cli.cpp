// mhrg: enumerate positions, query Grundy values, export game graphs, run
// the verification suites and serve the HTTP API.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mhrg/errors.hpp"
#include "mhrg/records.hpp"
#include "mhrg/service.hpp"
#include "mhrg/verify.hpp"

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitGuardrail = 3;
constexpr int kExitBadInput = 4;

using mhrg::VerificationReport;
using nlohmann::json;

int run_enumerate(int m, int n, const std::string& format, bool members_only)
{
    const mhrg::BoardParams board = mhrg::make_board(m, n);
    const mhrg::BoardAnalysis data = mhrg::analyze_board(board);
    std::vector<mhrg::PositionRecord> records;
    for (const mhrg::Partition& p : mhrg::all_partitions(board)) {
        if (!members_only || data.graph.contains(p)) {
            records.push_back(mhrg::make_position_record(data, p));
        }
    }
    if (format == "csv") {
        std::cout << mhrg::position_records_csv(records);
        return 0;
    }
    json out = json::array();
    for (const auto& rec : records) {
        out.push_back(mhrg::to_json(rec));
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_grundy(int m, int n, const std::string& lambda)
{
    const mhrg::BoardParams board = mhrg::make_board(m, n);
    const mhrg::Partition p = mhrg::make_partition(board, mhrg::parse_int_list(lambda));
    const mhrg::BoardAnalysis data = mhrg::analyze_board(board);
    std::cout << mhrg::position_detail_json(data, p).dump(2) << '\n';
    return 0;
}

int run_graph(int m, int n, const std::string& format)
{
    const mhrg::BoardAnalysis data = mhrg::analyze_board(mhrg::make_board(m, n));
    if (format == "dot") {
        std::cout << mhrg::graph_to_dot(data);
    } else {
        std::cout << mhrg::graph_to_json(data).dump(2) << '\n';
    }
    return 0;
}

struct VerifyOptions {
    std::string suite;
    int max_sum = 0;
    int max_n = 18;
};

std::vector<std::function<VerificationReport()>> plan_suite(const VerifyOptions& opt)
{
    std::vector<std::function<VerificationReport()>> jobs;
    if (opt.suite == "main") {
        for (const auto& b : mhrg::boards_up_to(opt.max_sum > 0 ? opt.max_sum : 12)) {
            jobs.push_back([b] { return mhrg::verify_main_theorem(b); });
        }
    } else if (opt.suite == "t-rows") {
        for (const auto& b : mhrg::boards_up_to(opt.max_sum > 0 ? opt.max_sum : 12)) {
            for (int t = 0; t <= b.m(); ++t) {
                jobs.push_back([b, t] { return mhrg::verify_t_rows(t, b.m(), b.n()); });
            }
        }
    } else if (opt.suite == "closed-form-m2") {
        for (int n = 2; n <= opt.max_n; ++n) {
            jobs.push_back([n] { return mhrg::verify_closed_form_m2(n); });
        }
    } else if (opt.suite == "closed-form-two-rows") {
        for (const auto& b : mhrg::boards_up_to(opt.max_sum > 0 ? opt.max_sum : 14)) {
            if (b.m() >= 2) {
                jobs.push_back([b] { return mhrg::verify_closed_form_two_rows(b.m(), b.n()); });
            }
        }
    } else if (opt.suite == "engine-invariants") {
        for (const auto& b : mhrg::boards_up_to(opt.max_sum > 0 ? opt.max_sum : 10)) {
            jobs.push_back([b] { return mhrg::verify_diagram_identities(b); });
            jobs.push_back([b] { return mhrg::verify_hook_uniqueness(b); });
            jobs.push_back([b] { return mhrg::verify_repeat_removal(b); });
            jobs.push_back([b] {
                const auto graph = mhrg::reachable_graph(b);
                return mhrg::verify_descent(graph);
            });
            jobs.push_back([b] {
                const auto graph = mhrg::reachable_graph(b);
                return mhrg::verify_ascent(graph);
            });
            jobs.push_back([b] {
                const auto data = mhrg::analyze_board(b);
                return mhrg::verify_grundy_recurrence(data.graph, data.table);
            });
        }
    }
    return jobs;
}

int run_verify(const VerifyOptions& opt)
{
    std::int64_t violations = 0;
    std::size_t reports = 0;
    for (const auto& job : plan_suite(opt)) {
        const VerificationReport report = job();
        ++reports;
        violations += static_cast<std::int64_t>(report.violations.size());
        std::cout << mhrg::to_json(report).dump() << '\n';
    }
    json summary{{"suite", opt.suite},
                 {"reports", reports},
                 {"violations", violations},
                 {"ok", violations == 0}};
    std::cout << summary.dump() << '\n';
    return violations == 0 ? 0 : kExitViolations;
}

int run_serve(const std::string& host, int port, const std::string& static_dir)
{
    mhrg::HttpService service(static_dir);
    const int bound = service.bind(host, port);
    if (bound < 0) {
        std::cerr << "mhrg: cannot bind " << host << ":" << port << '\n';
        return 1;
    }
    std::cerr << "mhrg: serving on http://" << host << ":" << bound << '\n';
    return service.listen_after_bind() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multiple hook removing game: engine, analysis and verification"};
    app.require_subcommand(1);

    int m = 0;
    int n = 0;
    std::string format = "json";
    bool members_only = false;
    std::string lambda;

    auto* enumerate = app.add_subcommand("enumerate", "List every partition of the board");
    enumerate->add_option("--m", m, "Rows")->required();
    enumerate->add_option("--n", n, "Columns")->required();
    enumerate->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    enumerate->add_flag("--members-only", members_only, "Only reachable positions");

    auto* grundy = app.add_subcommand("grundy", "Show one position with its options");
    grundy->add_option("--m", m, "Rows")->required();
    grundy->add_option("--n", n, "Columns")->required();
    grundy->add_option("--lambda", lambda, "Comma-separated parts, e.g. 3,1")->required();
    grundy->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", vopt.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(
            {"main", "t-rows", "closed-form-m2", "closed-form-two-rows", "engine-invariants"}));
    verify->add_option("--max-sum", vopt.max_sum, "Largest m + n to enumerate");
    verify->add_option("--max-n", vopt.max_n, "Largest n for closed-form-m2");

    auto* graph = app.add_subcommand("graph", "Export the game graph");
    graph->add_option("--m", m, "Rows")->required();
    graph->add_option("--n", n, "Columns")->required();
    graph->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    std::string host = "127.0.0.1";
    int port = 8080;
    std::string static_dir;
    auto* serve = app.add_subcommand("serve", "Serve the HTTP API and static UI files");
    serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
    serve->add_option("--host", host, "Bind address");
    serve->add_option("--static", static_dir, "Directory of UI assets")->check(CLI::ExistingDirectory);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) {
            return run_enumerate(m, n, format, members_only);
        }
        if (*grundy) {
            return run_grundy(m, n, lambda);
        }
        if (*verify) {
            return run_verify(vopt);
        }
        if (*graph) {
            return run_graph(m, n, format);
        }
        if (*serve) {
            return run_serve(host, port, static_dir);
        }
    } catch (const mhrg::ResourceLimit& e) {
        std::cerr << "mhrg: " << e.what() << '\n';
        return kExitGuardrail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "mhrg: " << e.what() << '\n';
        return kExitBadInput;
    }
    return 0;
}
