#pragma once

#include <memory>
#include <string>

#include <httplib.h>

#include "intergame/api.hpp"

namespace intergame {

/// Binds every Api route onto a cpp-httplib server. The caller owns the
/// listen loop (server.listen or bind_to_any_port + listen_after_bind).
inline void mount(httplib::Server& server, std::shared_ptr<Api> api) {
  auto dispatch = [api](const httplib::Request& req, httplib::Response& res) {
    const ApiResponse r = api->handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Get(R"(/.*)", dispatch);
  server.Post(R"(/.*)", dispatch);
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

}  // namespace intergame
