#pragma once

// Read-only HTTP/JSON front end.
//
//   GET  /api/v1/board/{m}/{n}
//   GET  /api/v1/board/{m}/{n}/position/{lambda}
//   POST /api/v1/board/{m}/{n}/move        {"from": [...], "box": [i, j]}
//   GET  /api/v1/board/{m}/{n}/graph
//
// Status codes: 400 malformed input, 404 unknown route / board / position,
// 422 board above the enumeration limit.

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "mhrg/records.hpp"

namespace httplib {
class Server;
}

namespace mhrg {

// Boards are analyzed once on first request; concurrent requests for the
// same board wait for the single computation.
class BoardCache {
public:
    std::shared_ptr<const BoardAnalysis> get(const BoardParams& board);
    std::size_t size() const;

private:
    using Entry = std::shared_future<std::shared_ptr<const BoardAnalysis>>;
    mutable std::mutex mutex_;
    std::map<std::pair<int, int>, Entry> entries_;
};

struct ApiResponse {
    int status = 200;
    nlohmann::json body;
};

// Routing and handlers, independent of the socket layer.
class Api {
public:
    ApiResponse get(std::string_view path);
    ApiResponse post(std::string_view path, std::string_view body);

    BoardCache& cache() { return cache_; }

private:
    BoardCache cache_;
};

class HttpService {
public:
    // static_dir may be empty; otherwise it is served at "/". Throws
    // std::invalid_argument when it is not a readable directory.
    explicit HttpService(std::string static_dir = {});
    ~HttpService();

    HttpService(const HttpService&) = delete;
    HttpService& operator=(const HttpService&) = delete;

    // Returns the bound port, or -1. Port 0 picks a free port.
    int bind(const std::string& host, int port);
    // Blocks until stop().
    bool listen_after_bind();
    void stop();
    bool is_running() const;

private:
    Api api_;
    std::unique_ptr<httplib::Server> server_;
};

} // namespace mhrg
