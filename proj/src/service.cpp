#include "mhrg/service.hpp"

#include <regex>
#include <stdexcept>

#include <httplib.h>

#include "mhrg/errors.hpp"

namespace mhrg {

using nlohmann::json;

std::shared_ptr<const BoardAnalysis> BoardCache::get(const BoardParams& board)
{
    const std::pair<int, int> key{board.m(), board.n()};
    std::promise<std::shared_ptr<const BoardAnalysis>> promise;
    Entry entry;
    bool owner = false;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            entry = promise.get_future().share();
            entries_.emplace(key, entry);
            owner = true;
        } else {
            entry = it->second;
        }
    }
    if (owner) {
        try {
            promise.set_value(std::make_shared<const BoardAnalysis>(analyze_board(board)));
        } catch (...) {
            // Failed boards (guardrail) are not cached.
            {
                std::lock_guard<std::mutex> lock(mutex_);
                entries_.erase(key);
            }
            promise.set_exception(std::current_exception());
        }
    }
    return entry.get();
}

std::size_t BoardCache::size() const
{
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

namespace {

ApiResponse error(int status, const std::string& message)
{
    return {status, json{{"error", message}, {"status", status}}};
}

const std::regex kBoard(R"(^/api/v1/board/(\d{1,6})/(\d{1,6})/?$)");
const std::regex kPosition(R"(^/api/v1/board/(\d{1,6})/(\d{1,6})/position/([^/]+)/?$)");
const std::regex kGraph(R"(^/api/v1/board/(\d{1,6})/(\d{1,6})/graph/?$)");
const std::regex kMove(R"(^/api/v1/board/(\d{1,6})/(\d{1,6})/move/?$)");

BoardParams board_from(const std::smatch& match)
{
    return make_board(std::stoi(match[1].str()), std::stoi(match[2].str()));
}

// Maps the library's exception types onto status codes.
template <typename Handler>
ApiResponse guarded(Handler&& handler)
{
    try {
        return handler();
    } catch (const ParseError& e) {
        return error(400, e.what());
    } catch (const InvalidBoard& e) {
        return error(404, e.what());
    } catch (const InvalidPosition& e) {
        return error(404, e.what());
    } catch (const ResourceLimit& e) {
        return error(422, e.what());
    } catch (const json::exception& e) {
        return error(400, std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

ApiResponse Api::get(std::string_view path_view)
{
    const std::string path(path_view);
    std::smatch match;
    return guarded([&]() -> ApiResponse {
        if (std::regex_match(path, match, kBoard)) {
            const auto data = cache_.get(board_from(match));
            return {200, board_summary_json(*data)};
        }
        if (std::regex_match(path, match, kPosition)) {
            const BoardParams board = board_from(match);
            const std::vector<int> parts = parse_int_list(match[3].str());
            if (static_cast<int>(parts.size()) != board.m()) {
                throw InvalidPosition("lambda must have exactly m=" + std::to_string(board.m()) +
                                      " entries");
            }
            const Partition p = make_partition(board, parts);
            const auto data = cache_.get(board);
            return {200, position_detail_json(*data, p)};
        }
        if (std::regex_match(path, match, kGraph)) {
            const auto data = cache_.get(board_from(match));
            return {200, graph_to_json(*data)};
        }
        return error(404, "no route for GET " + path);
    });
}

ApiResponse Api::post(std::string_view path_view, std::string_view body)
{
    const std::string path(path_view);
    std::smatch match;
    if (!std::regex_match(path, match, kMove)) {
        return error(404, "no route for POST " + path);
    }
    return guarded([&]() -> ApiResponse {
        const BoardParams board = board_from(match);
        const json doc = json::parse(body);
        if (!doc.is_object() || !doc.contains("from") || !doc.contains("box")) {
            throw ParseError("move body needs \"from\" and \"box\"");
        }
        const auto parts = doc.at("from").get<std::vector<int>>();
        const auto box = doc.at("box").get<std::vector<int>>();
        if (static_cast<int>(parts.size()) != board.m() || box.size() != 2) {
            throw ParseError("\"from\" must have m entries and \"box\" must be [i, j]");
        }
        Partition from;
        try {
            from = make_partition(board, parts);
        } catch (const InvalidPosition& e) {
            throw ParseError(e.what());
        }
        const Box b{box[0], box[1]};
        if (!from.contains(b)) {
            throw ParseError("box is not in the diagram");
        }
        return {200, to_json(mhr_move(board, from, b))};
    });
}

HttpService::HttpService(std::string static_dir) : server_(std::make_unique<httplib::Server>())
{
    auto reply = [](httplib::Response& res, const ApiResponse& out) {
        res.status = out.status;
        res.set_content(out.body.dump(), "application/json; charset=utf-8");
    };
    server_->Get(R"(/api/.*)", [this, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, api_.get(req.path));
    });
    server_->Post(R"(/api/.*)", [this, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, api_.post(req.path, req.body));
    });
    if (!static_dir.empty() && !server_->set_mount_point("/", static_dir)) {
        throw std::invalid_argument("cannot serve static files from " + static_dir);
    }
}

HttpService::~HttpService()
{
    stop();
}

int HttpService::bind(const std::string& host, int port)
{
    if (port == 0) {
        return server_->bind_to_any_port(host);
    }
    return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpService::listen_after_bind()
{
    return server_->listen_after_bind();
}

void HttpService::stop()
{
    if (server_) {
        server_->stop();
    }
}

bool HttpService::is_running() const
{
    return server_ && server_->is_running();
}

} // namespace mhrg
