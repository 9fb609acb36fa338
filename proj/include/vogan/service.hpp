#pragma once

#include <map>
#include <memory>
#include <string>

namespace vogan::service {

struct Response {
  int status = 200;
  std::string body;
};

// Routes one request without any socket. `query` holds URL parameters.
// Every non-2xx body is {"code":..., "message":...}.
Response handle(const std::string& method, const std::string& path,
                const std::map<std::string, std::string>& query, const std::string& body);

class Server {
 public:
  Server();
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds host:port (port 0 picks a free one). Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Serves until stop() is called. Requires a successful bind().
  bool run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace vogan::service
