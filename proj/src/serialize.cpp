#include "vogan/serialize.hpp"

namespace vogan {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) parse_fail(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) parse_fail(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

int param_int(const Json& params, const char* key) {
  if (!params.is_object() || !params.contains(key) || !params.at(key).is_number_integer()) {
    throw Error(ErrorCode::InvalidParams, std::string("parameter \"") + key + "\" must be an integer");
  }
  return params.at(key).get<int>();
}

}  // namespace

Json params_to_json(const FamilySpec& spec) {
  Json p = Json::object();
  switch (spec.family) {
    case Family::SL:
    case Family::B:
    case Family::D:
      p["m"] = spec.m;
      p["n"] = spec.n;
      break;
    case Family::C:
      p["n"] = spec.n;
      break;
    case Family::D21A:
      p["alpha"] = to_string(spec.alpha);
      break;
    case Family::F4:
    case Family::G3:
      break;
  }
  return p;
}

FamilySpec spec_from_json(std::string_view family, const Json& params) {
  const auto f = family_from_string(family);
  if (!f) throw Error(ErrorCode::InvalidParams, "unknown family \"" + std::string(family) + "\"");
  const Json p = params.is_null() ? Json::object() : params;
  if (!p.is_object()) throw Error(ErrorCode::InvalidParams, "params must be an object");
  switch (*f) {
    case Family::SL:
    case Family::B:
    case Family::D:
      return make_spec(*f, param_int(p, "m"), param_int(p, "n"));
    case Family::C:
      return make_spec(*f, 0, param_int(p, "n"));
    case Family::D21A: {
      Rational alpha{2};
      if (p.contains("alpha")) {
        const Json& a = p.at("alpha");
        std::optional<Rational> parsed;
        if (a.is_string()) parsed = parse_rational(a.get<std::string>());
        if (a.is_number_integer()) parsed = Rational(a.get<std::int64_t>());
        if (!parsed) throw Error(ErrorCode::InvalidParams, "alpha must be a rational such as \"2\" or \"-1/3\"");
        alpha = *parsed;
      }
      return make_spec(*f, 0, 0, alpha);
    }
    case Family::F4:
    case Family::G3:
      return make_spec(*f, 0, 0);
  }
  throw Error(ErrorCode::InvalidParams, "unknown family");
}

Json diagram_to_json(const Diagram& d) {
  Json j = Json::object();
  j["family"] = std::string(to_string(d.family.family));
  j["params"] = params_to_json(d.family);
  if (d.family.parity_rule != make_spec(d.family.family, 0, 0).parity_rule) {
    j["parity_rule"] = std::string(to_string(d.family.parity_rule));
  }
  Json nodes = Json::array();
  for (const Node& n : d.nodes) {
    Json o = Json::object();
    o["id"] = n.id;
    o["parity"] = std::string(to_string(n.parity));
    o["color"] = std::string(to_string(n.color));
    o["a"] = n.a_label;
    nodes.push_back(std::move(o));
  }
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const Edge& e : d.edges) {
    Json o = Json::object();
    o["u"] = e.u;
    o["v"] = e.v;
    o["mult"] = e.multiplicity;
    o["longer"] = e.longer ? Json(*e.longer) : Json(nullptr);
    edges.push_back(std::move(o));
  }
  j["edges"] = std::move(edges);
  j["lowest"] = d.lowest;
  return j;
}

std::string canonical_json(const Diagram& d) { return diagram_to_json(d).dump(); }

Diagram diagram_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("diagram must be a JSON object");
  Diagram d;
  d.family = spec_from_json(string_field(j, "family"), j.contains("params") ? j.at("params") : Json());
  if (j.contains("parity_rule")) {
    const auto p = parity_from_string(string_field(j, "parity_rule"));
    if (!p) parse_fail("parity_rule must be \"even\" or \"odd\"");
    d.family.parity_rule = *p;
  }
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) parse_fail("\"nodes\" must be an array");
  for (const Json& n : nodes) {
    const auto parity = parity_from_string(string_field(n, "parity"));
    const auto color = color_from_string(string_field(n, "color"));
    if (!parity) parse_fail("node parity must be \"even\" or \"odd\"");
    if (!color) parse_fail("node color must be white, grey or black");
    d.nodes.push_back(Node{int_field(n, "id"), *parity, *color, int_field(n, "a")});
  }
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) parse_fail("\"edges\" must be an array");
  for (const Json& e : edges) {
    Edge edge{int_field(e, "u"), int_field(e, "v"), int_field(e, "mult"), std::nullopt};
    if (e.contains("longer") && !e.at("longer").is_null()) edge.longer = int_field(e, "longer");
    d.edges.push_back(edge);
  }
  d.lowest = int_field(j, "lowest");
  d.verified = false;
  validate_structure(d);
  return d;
}

Diagram diagram_from_string(std::string_view text) { return diagram_from_json(parse_json(text)); }

Json circling_to_json(Circling c) {
  Json j = Json::object();
  j["circled"] = c.ids();
  return j;
}

Circling circling_from_json(const Json& j) {
  const Json& arr = j.is_object() ? field(j, "circled") : j;
  if (!arr.is_array()) parse_fail("circling must be {\"circled\":[...]} or an array of ids");
  std::vector<NodeId> ids;
  for (const Json& v : arr) {
    if (!v.is_number_integer()) parse_fail("circled ids must be integers");
    ids.push_back(v.get<int>());
  }
  return Circling::from_ids(ids);
}

Json steps_to_json(const PressSequence& s) {
  Json j = Json::object();
  j["steps"] = s.steps;
  return j;
}

PressSequence steps_from_json(const Json& j) {
  const Json& arr = j.is_object() ? field(j, "steps") : j;
  if (!arr.is_array()) parse_fail("steps must be an array of ids");
  PressSequence s;
  for (const Json& v : arr) {
    if (!v.is_number_integer()) parse_fail("steps must be integers");
    s.steps.push_back(v.get<int>());
  }
  return s;
}

Json symmetry_to_json(const Symmetry& s) {
  Json j = Json::object();
  j["perm"] = s.perm;
  j["fixes_lowest"] = s.fixes_lowest;
  return j;
}

Json class_to_json(const EquivalenceClass& c) {
  Json j = Json::object();
  j["representative"] = circling_to_json(c.representative);
  j["size"] = c.members.size();
  j["parity_mixed"] = c.parity_mixed;
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace vogan
