#include "vogan/service.hpp"

#include <functional>
#include <memory>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "vogan/vogan.h"

namespace vogan::service {

namespace {

using Json = nlohmann::ordered_json;
using DiagramPtr = std::unique_ptr<vogan_diagram, decltype(&vogan_diagram_free)>;

// Raised inside handlers; carries the HTTP status and the ApiError code.
struct ApiFailure {
  int status;
  std::string code;
  std::string message;
};

int http_status(vogan_status s) {
  switch (s) {
    case VOGAN_ERR_NOT_PRESSABLE:
    case VOGAN_ERR_NOT_ADMISSIBLE:
    case VOGAN_ERR_DIMENSION_MISMATCH:
    case VOGAN_ERR_ZERO_NORM:
      return 422;
    case VOGAN_ERR_CAP_EXCEEDED:
      return 413;
    case VOGAN_ERR_INTERNAL:
      return 500;
    default:
      return 400;
  }
}

void check(vogan_status s) {
  if (s != VOGAN_OK) throw ApiFailure{http_status(s), vogan_status_name(s), vogan_last_error()};
}

[[noreturn]] void malformed(const std::string& message) { throw ApiFailure{400, "Parse", message}; }

std::string take(char* s) {
  std::string out(s);
  vogan_string_free(s);
  return out;
}

Json parse_body(const std::string& body) {
  Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) malformed("request body must be a JSON object");
  return j;
}

// "diagram" may be a reference {family, params, parity?} or a full diagram;
// a body without "diagram" is read as the reference itself.
DiagramPtr diagram_of(const Json& body) {
  const Json& ref = body.contains("diagram") ? body.at("diagram") : body;
  if (!ref.is_object()) malformed("\"diagram\" must be an object");
  vogan_diagram* d = nullptr;
  check(vogan_diagram_from_ref(ref.dump().c_str(), &d));
  return DiagramPtr(d, vogan_diagram_free);
}

std::vector<int> ids_of(const Json& body, const char* key) {
  if (!body.contains(key)) malformed(std::string("missing \"") + key + "\"");
  const Json& v = body.at(key);
  const Json& arr = v.is_object() && v.contains("circled") ? v.at("circled") : v;
  if (!arr.is_array()) malformed(std::string("\"") + key + "\" must be {\"circled\":[...]} or an array");
  std::vector<int> out;
  for (const Json& x : arr) {
    if (!x.is_number_integer()) malformed(std::string("\"") + key + "\" ids must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

int vertex_of(const Json& body) {
  if (!body.contains("vertex") || !body.at("vertex").is_number_integer()) {
    malformed("\"vertex\" must be an integer");
  }
  return body.at("vertex").get<int>();
}

int int_param(const std::map<std::string, std::string>& q, const std::string& key) {
  const auto it = q.find(key);
  if (it == q.end()) return 0;
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ApiFailure{400, "InvalidParams", "query parameter \"" + key + "\" must be an integer"};
  }
}

std::string get_diagram(const std::map<std::string, std::string>& q) {
  const auto fam = q.find("family");
  if (fam == q.end()) throw ApiFailure{400, "InvalidParams", "missing query parameter \"family\""};
  const auto alpha = q.find("alpha");
  vogan_diagram* raw = nullptr;
  check(vogan_diagram_build(fam->second.c_str(), int_param(q, "m"), int_param(q, "n"),
                            alpha == q.end() ? nullptr : alpha->second.c_str(), &raw));
  DiagramPtr d(raw, vogan_diagram_free);
  if (const auto p = q.find("parity"); p != q.end()) check(vogan_diagram_set_parity(d.get(), p->second.c_str()));
  char* out = nullptr;
  check(vogan_diagram_json(d.get(), &out));
  return take(out);
}

using Handler = std::function<std::string(const Json&)>;

const std::map<std::string, Handler>& post_routes() {
  static const std::map<std::string, Handler> routes = {
      {"/press",
       [](const Json& b) {
         auto d = diagram_of(b);
         const auto c = ids_of(b, "circling");
         char* out = nullptr;
         check(vogan_press(d.get(), c.data(), c.size(), vertex_of(b), &out));
         return take(out);
       }},
      {"/orbit",
       [](const Json& b) {
         auto d = diagram_of(b);
         const auto c = ids_of(b, "circling");
         char* out = nullptr;
         check(vogan_orbit(d.get(), c.data(), c.size(), &out));
         return take(out);
       }},
      {"/reduce",
       [](const Json& b) {
         auto d = diagram_of(b);
         const auto c = ids_of(b, "circling");
         char* out = nullptr;
         check(vogan_reduce(d.get(), c.data(), c.size(), &out));
         return take(out);
       }},
      {"/admissible",
       [](const Json& b) {
         auto d = diagram_of(b);
         const auto c = ids_of(b, "circling");
         char* out = nullptr;
         check(vogan_admissible(d.get(), c.data(), c.size(), &out));
         return take(out);
       }},
      {"/related",
       [](const Json& b) {
         auto d = diagram_of(b);
         const auto c1 = ids_of(b, "c1");
         const auto c2 = ids_of(b, "c2");
         char* out = nullptr;
         check(vogan_related(d.get(), c1.data(), c1.size(), c2.data(), c2.size(), &out));
         return take(out);
       }},
      {"/equivalent",
       [](const Json& b) {
         auto d = diagram_of(b);
         const auto c1 = ids_of(b, "c1");
         const auto c2 = ids_of(b, "c2");
         char* out = nullptr;
         check(vogan_equivalent(d.get(), c1.data(), c1.size(), c2.data(), c2.size(), &out));
         return take(out);
       }},
      {"/classify",
       [](const Json& b) {
         auto d = diagram_of(b);
         char* out = nullptr;
         check(vogan_classify(d.get(), &out));
         return take(out);
       }},
      {"/symmetries",
       [](const Json& b) {
         auto d = diagram_of(b);
         char* out = nullptr;
         check(vogan_symmetries(d.get(), &out));
         return take(out);
       }},
      {"/reflect",
       [](const Json& b) {
         auto d = diagram_of(b);
         const auto c = ids_of(b, "circling");
         char* out = nullptr;
         check(vogan_reflect(d.get(), c.data(), c.size(), vertex_of(b), &out));
         return take(out);
       }},
  };
  return routes;
}

std::string error_body(const std::string& code, const std::string& message) {
  Json j = Json::object();
  j["code"] = code;
  j["message"] = message;
  return j.dump();
}

}  // namespace

Response handle(const std::string& method, const std::string& path,
                const std::map<std::string, std::string>& query, const std::string& body) {
  try {
    if (method == "GET" && path == "/families") {
      char* out = nullptr;
      check(vogan_families(&out));
      return {200, take(out)};
    }
    if (method == "GET" && path == "/diagram") return {200, get_diagram(query)};
    if (method == "POST") {
      const auto& routes = post_routes();
      if (const auto it = routes.find(path); it != routes.end()) return {200, it->second(parse_body(body))};
    }
    return {404, error_body("NotFound", method + " " + path + " is not an endpoint")};
  } catch (const ApiFailure& f) {
    return {f.status, error_body(f.code, f.message)};
  } catch (const std::exception& e) {
    return {500, error_body("Internal", e.what())};
  }
}

struct Server::Impl {
  httplib::Server http;
};

Server::Server() : impl_(std::make_unique<Impl>()) {
  auto serve = [](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const Response r = handle(req.method, req.path, query, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  // Without SO_REUSEPORT a second server on a busy port fails to bind.
  impl_->http.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });
  impl_->http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                   {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                   {"Access-Control-Allow-Headers", "Content-Type"}});
  impl_->http.Get(R"(/.*)", serve);
  impl_->http.Post(R"(/.*)", serve);
  impl_->http.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

Server::~Server() = default;

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool Server::run() { return impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

}  // namespace vogan::service
