// vogan-cli: command-line front end over the C API.
//
// stdout carries machine JSON (or the requested rendering); stderr carries
// human-readable summaries and error messages.
//
// Exit codes: 0 ok, 2 invalid input, 3 not pressable, 4 not admissible,
// 5 enumeration cap exceeded, 6 cannot bind the service port, 1 other.

#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <pthread.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "vogan/service.hpp"
#include "vogan/vogan.h"

namespace {

using Json = nlohmann::ordered_json;
using DiagramPtr = std::unique_ptr<vogan_diagram, decltype(&vogan_diagram_free)>;

constexpr int kExitOther = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotPressable = 3;
constexpr int kExitNotAdmissible = 4;
constexpr int kExitCap = 5;
constexpr int kExitPort = 6;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(vogan_status s) {
  switch (s) {
    case VOGAN_ERR_NOT_PRESSABLE: return kExitNotPressable;
    case VOGAN_ERR_NOT_ADMISSIBLE: return kExitNotAdmissible;
    case VOGAN_ERR_CAP_EXCEEDED: return kExitCap;
    case VOGAN_ERR_INTERNAL: return kExitOther;
    default: return kExitInput;
  }
}

void check(vogan_status s) {
  if (s != VOGAN_OK) {
    throw Failure{exit_code_for(s), std::string(vogan_status_name(s)) + ": " + vogan_last_error()};
  }
}

std::string take(char* s) {
  std::string out(s);
  vogan_string_free(s);
  return out;
}

struct Options {
  std::string family;
  int m = 0;
  int n = 0;
  std::string alpha;
  std::string diagram_path;
  std::string parity;
  std::string circle;
  std::string c1;
  std::string c2;
  int at = 0;
  std::string format = "ascii";
  bool full = false;
  std::string host = "127.0.0.1";
  int port = 8080;
};

std::vector<int> parse_ids(const std::string& text, const std::string& flag) {
  std::vector<int> ids;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, tok.find_last_not_of(" \t") - b + 1);
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Failure{kExitInput, flag + ": \"" + tok + "\" is not a vertex id"};
    }
  }
  return ids;
}

DiagramPtr load_diagram(const Options& o) {
  vogan_diagram* raw = nullptr;
  if (!o.diagram_path.empty()) {
    std::ifstream in(o.diagram_path);
    if (!in) throw Failure{kExitInput, "cannot read " + o.diagram_path};
    std::stringstream buf;
    buf << in.rdbuf();
    check(vogan_diagram_parse(buf.str().c_str(), &raw));
    std::cerr << "note: diagram loaded from file is unverified (no root realization)\n";
  } else {
    if (o.family.empty()) throw Failure{kExitInput, "either --family or --diagram is required"};
    check(vogan_diagram_build(o.family.c_str(), o.m, o.n, o.alpha.empty() ? nullptr : o.alpha.c_str(), &raw));
  }
  DiagramPtr d(raw, vogan_diagram_free);
  if (!o.parity.empty()) check(vogan_diagram_set_parity(d.get(), o.parity.c_str()));
  return d;
}

void add_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "SL, B, C, D, D21A, F4 or G3");
  cmd->add_option("--m", o.m, "first rank parameter");
  cmd->add_option("--n", o.n, "second rank parameter");
  cmd->add_option("--alpha", o.alpha, "D21A parameter as a rational, default 2");
  cmd->add_option("--diagram", o.diagram_path, "diagram JSON file instead of a catalog entry");
  cmd->add_option("--parity", o.parity, "override the admissibility rule: even or odd");
}

std::string circled_text(const Json& c) {
  std::string s = "{";
  for (std::size_t k = 0; k < c.at("circled").size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(c.at("circled")[k].get<int>());
  }
  return s + "}";
}

int serve(const Options& o) {
  // Route SIGINT/SIGTERM to a waiter thread so the server stops from normal code.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  vogan::service::Server server;
  const int port = server.bind(o.host, o.port);
  if (port < 0) {
    std::cerr << "cannot bind " << o.host << ":" << o.port << "\n";
    return kExitPort;
  }
  std::cout << "serving on " << o.host << ":" << port << std::endl;

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  const bool ok = server.run();
  // A stop() triggered by anything but a signal leaves the waiter blocked.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  std::cerr << "stopped\n";
  return ok ? 0 : kExitOther;
}

int run(int argc, char** argv) {
  CLI::App app{"Vogan superdiagram toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* families = app.add_subcommand("families", "list catalog families");
  auto* show = app.add_subcommand("show", "render a diagram");
  auto* press = app.add_subcommand("press", "press a circled even vertex");
  auto* orbit = app.add_subcommand("orbit", "orbit of a circling under presses");
  auto* related = app.add_subcommand("related", "press sequence from c1 to c2, if any");
  auto* equiv = app.add_subcommand("equivalent", "decide whether two circlings give the same real form");
  auto* reduce = app.add_subcommand("reduce", "smallest circling in the orbit");
  auto* admissible = app.add_subcommand("admissible", "admissibility of a circling");
  auto* symmetries = app.add_subcommand("symmetries", "diagram automorphisms");
  auto* classify = app.add_subcommand("classify", "classes of admissible circlings");
  auto* reflect = app.add_subcommand("reflect", "compare a press with the odd reflection data");
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP service");

  for (auto* cmd : {show, press, orbit, related, equiv, reduce, admissible, symmetries, classify, reflect}) {
    add_source(cmd, o);
  }
  for (auto* cmd : {show, press, orbit, reduce, admissible, reflect}) {
    cmd->add_option("--circle", o.circle, "comma-separated circled vertex ids");
  }
  for (auto* cmd : {press, reflect}) cmd->add_option("--at", o.at, "vertex to press")->required();
  for (auto* cmd : {related, equiv}) {
    cmd->add_option("--c1", o.c1, "first circling")->required();
    cmd->add_option("--c2", o.c2, "second circling")->required();
  }
  show->add_option("--format", o.format, "ascii, dot or json")
      ->check(CLI::IsMember({"ascii", "dot", "json"}));
  press->add_flag("--full", o.full, "print the full service payload");
  serve_cmd->add_option("--host", o.host, "address to bind");
  serve_cmd->add_option("--port", o.port, "port to bind, 0 for any free port");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*serve_cmd) return serve(o);
    char* out = nullptr;
    if (*families) {
      check(vogan_families(&out));
      std::cout << take(out) << "\n";
      return 0;
    }

    auto d = load_diagram(o);
    const auto circle = parse_ids(o.circle, "--circle");
    if (*show) {
      check(vogan_render(d.get(), o.format.c_str(), circle.data(), circle.size(), &out));
      std::cout << take(out);
      if (o.format == "json") std::cout << "\n";
      return 0;
    }
    if (*press) {
      check(vogan_press(d.get(), circle.data(), circle.size(), o.at, &out));
      const Json payload = Json::parse(take(out));
      std::cout << (o.full ? payload : payload.at("circling")).dump() << "\n";
      std::cerr << "pressed " << o.at << ": " << circled_text(payload.at("circling"))
                << (payload.at("admissible").get<bool>() ? " (admissible)" : " (not admissible)") << "\n";
      return 0;
    }
    if (*orbit) {
      check(vogan_orbit(d.get(), circle.data(), circle.size(), &out));
      const Json payload = Json::parse(take(out));
      std::cout << payload.dump() << "\n";
      std::cerr << "orbit of " << payload.at("size") << " circlings, smallest has "
                << payload.at("min_size") << " circled\n";
      return 0;
    }
    if (*related || *equiv) {
      const auto c1 = parse_ids(o.c1, "--c1");
      const auto c2 = parse_ids(o.c2, "--c2");
      if (*related) {
        check(vogan_related(d.get(), c1.data(), c1.size(), c2.data(), c2.size(), &out));
      } else {
        check(vogan_equivalent(d.get(), c1.data(), c1.size(), c2.data(), c2.size(), &out));
      }
      const Json payload = Json::parse(take(out));
      std::cout << payload.dump() << "\n";
      const bool yes = payload.at(*related ? "related" : "equivalent").get<bool>();
      std::cerr << (yes ? "yes" : "no") << "\n";
      return 0;
    }
    if (*reduce) {
      check(vogan_reduce(d.get(), circle.data(), circle.size(), &out));
      const Json payload = Json::parse(take(out));
      std::cout << payload.dump() << "\n";
      std::cerr << "reduced to " << circled_text(payload.at("circling")) << " after "
                << payload.at("steps").size() << " presses (bound " << payload.at("bound") << ")\n";
      return 0;
    }
    if (*admissible) {
      check(vogan_admissible(d.get(), circle.data(), circle.size(), &out));
      std::cout << take(out) << "\n";
      return 0;
    }
    if (*symmetries) {
      check(vogan_symmetries(d.get(), &out));
      const Json payload = Json::parse(take(out));
      std::cout << payload.dump() << "\n";
      std::cerr << payload.at("symmetries").size() << " automorphisms\n";
      return 0;
    }
    if (*classify) {
      check(vogan_classify(d.get(), &out));
      const Json payload = Json::parse(take(out));
      std::cout << payload.dump() << "\n";
      std::cerr << payload.at("classes").size() << " classes\n";
      return 0;
    }
    if (*reflect) {
      check(vogan_reflect(d.get(), circle.data(), circle.size(), o.at, &out));
      const Json payload = Json::parse(take(out));
      std::cout << payload.dump() << "\n";
      std::cerr << (payload.at("all_agree").get<bool>() ? "press matches the reflection"
                                                         : "press and reflection disagree")
                << "\n";
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitOther;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
