#include "mhrg/records.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "mhrg/errors.hpp"

namespace mhrg {

using nlohmann::json;

BoardAnalysis analyze_board(const BoardParams& board)
{
    GameGraph graph = reachable_graph(board);
    GrundyTable table = grundy_table(graph);
    return BoardAnalysis{board, std::move(graph), std::move(table)};
}

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    if (text.empty()) {
        throw ParseError("empty integer list");
    }
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view item =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw ParseError("'" + std::string(text) + "' is not a comma-separated integer list");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

PositionRecord make_position_record(const BoardAnalysis& data, const Partition& p)
{
    PositionRecord rec;
    rec.m = data.board.m();
    rec.n = data.board.n();
    rec.lambda = p;
    rec.index_set = index_set(data.board, p);
    rec.dual = dual(data.board, p);
    rec.grundy = data.table.find(p);
    rec.member = rec.grundy.has_value();
    if (rec.grundy) {
        rec.outcome = *rec.grundy == 0 ? "P" : "N";
    }
    return rec;
}

std::vector<OptionRecord> make_option_records(const BoardAnalysis& data, const Partition& p)
{
    std::map<Partition, OptionRecord> by_dest;
    for (const MoveRecord& mv : data.graph.moves_from(p)) {
        auto [it, fresh] = by_dest.try_emplace(mv.to);
        OptionRecord& opt = it->second;
        if (fresh) {
            opt.to = mv.to;
            opt.op = mv.op;
            opt.grundy = data.table.at(mv.to);
        }
        opt.via_boxes.push_back({mv.box, mv.first_lr, mv.op, mv.second_box, mv.second_lr});
    }
    std::vector<OptionRecord> out;
    for (auto& [dest, opt] : by_dest) {
        out.push_back(std::move(opt));
    }
    return out;
}

json to_json(const Partition& p)
{
    return json(p.parts);
}

json to_json(Box b)
{
    return json::array({b.row, b.col});
}

json to_json(LrPair lr)
{
    return json::array({lr.l, lr.r});
}

json to_json(const MoveRecord& rec)
{
    json j;
    j["from"] = to_json(rec.from);
    j["box"] = to_json(rec.box);
    j["first_lr"] = to_json(rec.first_lr);
    j["op"] = std::string(to_string(rec.op));
    j["second_box"] = rec.second_box ? to_json(*rec.second_box) : json(nullptr);
    j["second_lr"] = rec.second_lr ? to_json(*rec.second_lr) : json(nullptr);
    j["to"] = to_json(rec.to);
    return j;
}

namespace {

json via_json(const ViaBox& v)
{
    json j;
    j["box"] = to_json(v.box);
    j["first_lr"] = to_json(v.first_lr);
    j["op"] = std::string(to_string(v.op));
    if (v.second_box) {
        j["second_box"] = to_json(*v.second_box);
    }
    if (v.second_lr) {
        j["second_lr"] = to_json(*v.second_lr);
    }
    return j;
}

} // namespace

json to_json(const OptionRecord& rec)
{
    json j;
    j["to"] = to_json(rec.to);
    j["op"] = std::string(to_string(rec.op));
    j["via_boxes"] = json::array();
    for (const ViaBox& v : rec.via_boxes) {
        j["via_boxes"].push_back(via_json(v));
    }
    j["grundy"] = rec.grundy;
    return j;
}

json to_json(const PositionRecord& rec)
{
    json j;
    j["m"] = rec.m;
    j["n"] = rec.n;
    j["lambda"] = to_json(rec.lambda);
    j["index_set"] = rec.index_set.elements;
    j["dual"] = to_json(rec.dual);
    j["member"] = rec.member;
    j["grundy"] = rec.grundy ? json(*rec.grundy) : json(nullptr);
    j["outcome"] = rec.outcome ? json(*rec.outcome) : json(nullptr);
    return j;
}

json to_json(const VerificationReport& report)
{
    json j;
    j["suite"] = report.suite;
    json params = json::object();
    for (const auto& [k, v] : report.params) {
        params[k] = v;
    }
    j["params"] = params;
    j["counts"] = report.counts;
    j["violations"] = report.violations;
    j["ok"] = report.ok();
    return j;
}

json board_summary_json(const BoardAnalysis& data)
{
    json j;
    j["m"] = data.board.m();
    j["n"] = data.board.n();
    j["chi"] = data.board.chi();
    j["c"] = data.board.c();
    j["positions_total"] = binomial(data.board.m() + data.board.n(), data.board.m());
    j["members"] = data.graph.node_count();
    j["start_grundy"] = data.table.at(data.graph.start());
    return j;
}

json position_detail_json(const BoardAnalysis& data, const Partition& p)
{
    json j = to_json(make_position_record(data, p));
    j["options"] = json::array();
    j["best_moves"] = json::array();
    j["engine_move"] = nullptr;
    if (!data.graph.contains(p) || p.empty()) {
        return j;
    }
    for (const OptionRecord& opt : make_option_records(data, p)) {
        j["options"].push_back(to_json(opt));
    }
    for (const Partition& best : best_moves(data.graph, data.table, p)) {
        j["best_moves"].push_back(to_json(best));
    }
    j["engine_move"] = to_json(engine_reply(data.graph, data.table, p));
    return j;
}

json graph_to_json(const BoardAnalysis& data)
{
    json j;
    j["m"] = data.board.m();
    j["n"] = data.board.n();
    j["start"] = to_json(data.graph.start());
    j["nodes"] = json::array();
    for (const auto& [node, recs] : data.graph.moves()) {
        json nj;
        nj["lambda"] = to_json(node);
        nj["grundy"] = data.table.at(node);
        nj["options"] = json::array();
        for (const OptionRecord& opt : make_option_records(data, node)) {
            nj["options"].push_back(to_json(opt));
        }
        j["nodes"].push_back(std::move(nj));
    }
    return j;
}

namespace {

Partition partition_from(const BoardParams& board, const json& j)
{
    if (!j.is_array()) {
        throw ParseError("expected a partition array");
    }
    const auto parts = j.get<std::vector<int>>();
    if (static_cast<int>(parts.size()) != board.m()) {
        throw ParseError("partition arrays must have exactly m entries");
    }
    return make_partition(board, parts);
}

std::pair<int, int> pair_from(const json& j)
{
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("expected a two-element array");
    }
    return {j[0].get<int>(), j[1].get<int>()};
}

Box box_from(const json& j)
{
    const auto [i, k] = pair_from(j);
    return {i, k};
}

LrPair lr_from(const json& j)
{
    const auto [l, r] = pair_from(j);
    return {l, r};
}

} // namespace

BoardAnalysis graph_from_json(const json& doc)
{
    try {
        const BoardParams board = make_board(doc.at("m").get<int>(), doc.at("n").get<int>());
        const Partition start = partition_from(board, doc.at("start"));
        std::map<Partition, std::vector<MoveRecord>> moves;
        GrundyTable table{board, {}};
        for (const json& nj : doc.at("nodes")) {
            const Partition from = partition_from(board, nj.at("lambda"));
            table.values[from] = nj.at("grundy").get<int>();
            std::vector<MoveRecord>& recs = moves[from];
            for (const json& oj : nj.at("options")) {
                const Partition to = partition_from(board, oj.at("to"));
                for (const json& vj : oj.at("via_boxes")) {
                    MoveRecord rec;
                    rec.from = from;
                    rec.box = box_from(vj.at("box"));
                    rec.first_lr = lr_from(vj.at("first_lr"));
                    rec.op = hook_op_from_string(vj.at("op").get<std::string>());
                    if (vj.contains("second_box")) {
                        rec.second_box = box_from(vj.at("second_box"));
                    }
                    if (vj.contains("second_lr")) {
                        rec.second_lr = lr_from(vj.at("second_lr"));
                    }
                    rec.to = to;
                    recs.push_back(std::move(rec));
                }
            }
            std::sort(recs.begin(), recs.end(),
                      [](const MoveRecord& a, const MoveRecord& b) { return a.box < b.box; });
        }
        return BoardAnalysis{board, GameGraph(board, start, std::move(moves)), std::move(table)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed graph document: ") + e.what());
    }
}

namespace {

std::string node_id(const Partition& p)
{
    std::string s;
    for (int i = 0; i < p.rows(); ++i) {
        s += (i ? "," : "") + std::to_string(p.parts[i]);
    }
    return "\"" + s + "\"";
}

} // namespace

std::string graph_to_dot(const BoardAnalysis& data)
{
    std::ostringstream out;
    out << "digraph mhrg_" << data.board.m() << "x" << data.board.n() << " {\n";
    out << "  rankdir=TB;\n";
    for (const auto& [node, recs] : data.graph.moves()) {
        out << "  " << node_id(node) << " [label=\"" << to_string(node) << "\\nG="
            << data.table.at(node) << "\"];\n";
    }
    for (const auto& [node, recs] : data.graph.moves()) {
        for (const OptionRecord& opt : make_option_records(data, node)) {
            const bool single = std::any_of(opt.via_boxes.begin(), opt.via_boxes.end(),
                                            [](const ViaBox& v) { return v.op == HookOp::Single; });
            const bool twice = std::any_of(opt.via_boxes.begin(), opt.via_boxes.end(),
                                           [](const ViaBox& v) { return v.op == HookOp::Double; });
            const char* label = single && twice ? "MHR1 or MHR2" : (single ? "MHR1" : "MHR2");
            out << "  " << node_id(node) << " -> " << node_id(opt.to) << " [label=\"" << label
                << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

namespace {

std::string join_ints(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return "\"" + s + "\"";
}

} // namespace

std::string position_records_csv(const std::vector<PositionRecord>& records)
{
    std::ostringstream out;
    out << "m,n,lambda,index_set,dual,member,grundy,outcome\n";
    for (const PositionRecord& r : records) {
        out << r.m << ',' << r.n << ',' << join_ints(r.lambda.parts) << ','
            << join_ints(r.index_set.elements) << ',' << join_ints(r.dual.parts) << ','
            << (r.member ? "true" : "false") << ',' << (r.grundy ? std::to_string(*r.grundy) : "")
            << ',' << r.outcome.value_or("") << '\n';
    }
    return out.str();
}

} // namespace mhrg
