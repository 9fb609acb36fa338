#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "vogan/service.hpp"

using vogan::service::handle;
using Json = nlohmann::json;

namespace {

vogan::service::Response post(const std::string& path, const std::string& body) {
  return handle("POST", path, {}, body);
}

std::string error_code(const vogan::service::Response& r) { return Json::parse(r.body).at("code"); }

}  // namespace

TEST_CASE("GET /families and /diagram") {
  const auto fams = handle("GET", "/families", {}, "");
  CHECK(fams.status == 200);
  CHECK(Json::parse(fams.body).at("families").size() == 7);

  const auto d = handle("GET", "/diagram", {{"family", "SL"}, {"m", "3"}, {"n", "2"}}, "");
  CHECK(d.status == 200);
  CHECK(Json::parse(d.body).at("nodes").size() == 7);

  const auto bad = handle("GET", "/diagram", {{"family", "SL"}, {"m", "0"}, {"n", "2"}}, "");
  CHECK(bad.status == 400);
  CHECK(error_code(bad) == "InvalidParams");
  CHECK(handle("GET", "/diagram", {{"family", "SL"}, {"m", "x"}}, "").status == 400);
  CHECK(handle("GET", "/diagram", {}, "").status == 400);
}

TEST_CASE("POST /press on the nine-cycle") {
  const auto r = post("/press", R"({"diagram":{"family":"SL","params":{"m":4,"n":3}},"circling":{"circled":[1,2,3,4,6]},"vertex":2})");
  REQUIRE(r.status == 200);
  const Json j = Json::parse(r.body);
  CHECK(j.at("circling").at("circled") == Json::array({2, 4, 6}));
  CHECK(j.at("pressable") == Json::array({2, 4, 6}));
}

TEST_CASE("POST /press at an odd vertex is 422") {
  const auto r = post("/press", R"({"diagram":{"family":"SL","params":{"m":4,"n":3}},"circling":[1,2,3,4,6],"vertex":5})");
  CHECK(r.status == 422);
  CHECK(error_code(r) == "NotPressable");
}

TEST_CASE("POST /equivalent on the D(5,3) pair") {
  const auto r = post("/equivalent", R"({"diagram":{"family":"D","params":{"m":5,"n":3}},"c1":[2,4,9],"c2":[1,4,9]})");
  REQUIRE(r.status == 200);
  CHECK(Json::parse(r.body).at("equivalent") == true);
}

TEST_CASE("POST /related, /reduce, /classify") {
  const auto rel = post("/related", R"({"family":"SL","params":{"m":3,"n":2},"c1":[1,5],"c2":[3,5]})");
  CHECK(rel.body == R"({"related":true,"steps":[1,2,3]})");

  const auto red = post("/reduce", R"({"diagram":{"family":"D","params":{"m":5,"n":3}},"circling":[2,4,9]})");
  REQUIRE(red.status == 200);
  CHECK(Json::parse(red.body).at("circling").at("circled") == Json::array({1, 9}));

  const auto inadm = post("/reduce", R"({"diagram":{"family":"D","params":{"m":4,"n":2}},"circling":[4,7]})");
  CHECK(inadm.status == 422);
  CHECK(error_code(inadm) == "NotAdmissible");

  const auto cls = post("/classify", R"({"diagram":{"family":"SL","params":{"m":3,"n":2}}})");
  REQUIRE(cls.status == 200);
  CHECK(Json::parse(cls.body).at("classes").size() == 6);
}

TEST_CASE("cap exceeded is 413") {
  ::setenv("VOGAN_ORBIT_CAP", "8", 1);
  const auto r = post("/classify", R"({"diagram":{"family":"SL","params":{"m":4,"n":3}}})");
  ::unsetenv("VOGAN_ORBIT_CAP");
  CHECK(r.status == 413);
  CHECK(error_code(r) == "CapExceeded");
}

TEST_CASE("malformed requests are 400 with an ApiError body") {
  for (const auto& [path, body] : std::vector<std::pair<std::string, std::string>>{
           {"/press", "not json"},
           {"/press", "[]"},
           {"/press", R"({"diagram":{"family":"SL","params":{"m":4,"n":3}},"circling":[1]})"},
           {"/press", R"({"diagram":{"family":"SL","params":{"m":4,"n":3}},"circling":"x","vertex":1})"},
           {"/related", R"({"diagram":{"family":"SL","params":{"m":4,"n":3}},"c1":[1]})"},
           {"/classify", R"({"diagram":{"params":{}}})"},
       }) {
    CAPTURE(body);
    const auto r = post(path, body);
    CHECK(r.status == 400);
    const Json j = Json::parse(r.body);
    CHECK(j.contains("code"));
    CHECK(j.contains("message"));
  }
  const auto missing = handle("GET", "/nowhere", {}, "");
  CHECK(missing.status == 404);
  CHECK(error_code(missing) == "NotFound");
}

TEST_CASE("raw diagram upload is marked unverified") {
  const auto d = handle("GET", "/diagram", {{"family", "D"}, {"m", "5"}, {"n", "3"}}, "");
  const std::string body = R"({"diagram":)" + d.body + R"(,"circling":[2,4,9]})";
  const auto r = post("/reduce", body);
  REQUIRE(r.status == 200);
  CHECK(Json::parse(r.body).at("verified") == false);
}

TEST_CASE("identical requests give identical responses") {
  const std::string body = R"({"diagram":{"family":"D","params":{"m":5,"n":3}},"c1":[2,4,9],"c2":[1,4,9]})";
  CHECK(post("/equivalent", body).body == post("/equivalent", body).body);
}

TEST_CASE("served over HTTP with CORS headers") {
  vogan::service::Server server;
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread t([&] { server.run(); });

  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(5);
  httplib::Result res;
  for (int tries = 0; tries < 50 && !res; ++tries) {
    res = client.Get("/families");
    if (!res) std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(res->get_header_value("Content-Type") == "application/json");

  auto pressed = client.Post("/press",
                             R"({"diagram":{"family":"SL","params":{"m":4,"n":3}},"circling":[1,2,3,4,6],"vertex":5})",
                             "application/json");
  REQUIRE(pressed);
  CHECK(pressed->status == 422);

  auto pre = client.Options("/press");
  REQUIRE(pre);
  CHECK(pre->status == 204);

  vogan::service::Server second;
  CHECK(second.bind("127.0.0.1", port) == -1);

  server.stop();
  t.join();
}
