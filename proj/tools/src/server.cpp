// SPDX-License-Identifier: Apache-2.0

#include <ostream>

#include "puspec/service.hpp"
#include "puspec_cli/cli.hpp"

// after Eigen: <resolv.h> defines _res
#include <httplib.h>

namespace puspec::cli {

namespace {

void answer(const httplib::Request& req, httplib::Response& res) {
  service::Query query;
  for (const auto& [k, v] : req.params) query[k] = v;
  const service::Response r = service::dispatch(req.method, req.path, query, req.body);
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

int serve(const std::string& host, int port, std::ostream& out) {
  httplib::Server server;
  server.Get("/basis", answer);
  for (const char* path : {"/sample", "/trajectory", "/representatives", "/pick_hue", "/palette"})
    server.Post(path, answer);
  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    const service::Response r = service::dispatch(req.method, req.path, {}, req.body);
    res.set_content(r.body.dump(), "application/json");
  });
  if (!server.bind_to_port(host, port)) {
    out << "cannot bind " << host << ":" << port << "\n";
    return kIo;
  }
  out << "listening on http://" << host << ":" << port << std::endl;
  return server.listen_after_bind() ? kSuccess : kIo;
}

}  // namespace puspec::cli
