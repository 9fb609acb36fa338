#include "vogan/payload.hpp"

namespace vogan {

namespace {

Json finish(const Diagram& d, Json j) {
  if (!d.verified) j["verified"] = false;
  return j;
}

Json ids(const std::vector<NodeId>& v) { return Json(v); }

}  // namespace

Json families_payload() {
  Json list = Json::array();
  for (const FamilyTemplate& t : list_families()) {
    Json o = Json::object();
    o["family"] = std::string(to_string(t.family));
    o["display"] = t.display;
    o["params"] = t.params;
    o["constraints"] = t.constraints;
    o["default_parity"] = std::string(to_string(t.default_parity));
    list.push_back(std::move(o));
  }
  Json j = Json::object();
  j["families"] = std::move(list);
  return j;
}

Json press_payload(const Diagram& d, Circling c, NodeId vertex) {
  const Circling next = press(d, c, vertex);
  Json j = Json::object();
  j["circling"] = circling_to_json(next);
  j["admissible"] = is_admissible(d, next);
  j["pressable"] = ids(pressable(d, next));
  return finish(d, std::move(j));
}

Json orbit_payload(const Diagram& d, Circling c, const EngineOptions& opts) {
  const OrbitReport r = f_orbit(d, c, opts);
  Json orbit = Json::array();
  for (Circling x : r.orbit) orbit.push_back(circling_to_json(x));
  Json j = Json::object();
  j["seed"] = circling_to_json(r.seed);
  j["size"] = r.orbit.size();
  j["min_size"] = r.min_size;
  j["orbit"] = std::move(orbit);
  return finish(d, std::move(j));
}

Json related_payload(const Diagram& d, Circling c1, Circling c2, const EngineOptions& opts) {
  const auto seq = f_related(d, c1, c2, opts);
  Json j = Json::object();
  j["related"] = seq.has_value();
  if (seq) j["steps"] = ids(seq->steps);
  return finish(d, std::move(j));
}

Json equivalent_payload(const Diagram& d, Circling c1, Circling c2, const EngineOptions& opts) {
  const Equivalence e = equivalent(d, c1, c2, opts);
  Json j = Json::object();
  j["equivalent"] = e.equivalent;
  if (e.symmetry) j["symmetry"] = symmetry_to_json(*e.symmetry);
  if (e.steps) j["steps"] = ids(e.steps->steps);
  return finish(d, std::move(j));
}

Json reduce_payload(const Diagram& d, Circling c, const EngineOptions& opts) {
  const Reduction r = reduce(d, c, opts);
  const int bound = odd_removed_components(d);
  Json j = Json::object();
  j["circling"] = circling_to_json(r.circling);
  j["steps"] = ids(r.steps.steps);
  j["bound"] = bound;
  j["reduced"] = r.circling.size() <= bound;
  return finish(d, std::move(j));
}

Json admissible_payload(const Diagram& d, Circling c) {
  Json j = Json::object();
  j["admissible"] = is_admissible(d, c);
  return finish(d, std::move(j));
}

Json symmetries_payload(const Diagram& d) {
  Json list = Json::array();
  for (const Symmetry& s : automorphisms(d)) list.push_back(symmetry_to_json(s));
  Json j = Json::object();
  j["symmetries"] = std::move(list);
  return finish(d, std::move(j));
}

Json classify_payload(const Diagram& d, const EngineOptions& opts) {
  Json list = Json::array();
  for (const EquivalenceClass& c : classify(d, opts)) list.push_back(class_to_json(c));
  Json j = Json::object();
  j["classes"] = std::move(list);
  return finish(d, std::move(j));
}

Json reflect_payload(const Diagram& d, Circling c, NodeId vertex) {
  if (!d.verified || !(build_preferred_diagram(d.family) == d)) {
    throw Error(ErrorCode::DimensionMismatch, "reflection data needs a catalog diagram");
  }
  const ReflectionReport rep = reflection_report(d, root_realization(d.family), c, vertex);
  Json list = Json::array();
  for (const NeighborReflection& nb : rep.neighbors) {
    Json o = Json::object();
    o["neighbor"] = nb.neighbor;
    o["parity"] = std::string(to_string(nb.parity));
    o["n"] = to_string(nb.n);
    o["n_in_range"] = nb.n_in_range;
    o["parity_preserved"] = nb.parity_preserved;
    o["reflection_toggles"] = nb.reflection_toggles;
    o["press_toggles"] = nb.press_toggles;
    o["agrees"] = nb.agrees;
    list.push_back(std::move(o));
  }
  Json j = Json::object();
  j["vertex"] = rep.vertex;
  j["norm"] = to_string(rep.norm);
  j["neighbors"] = std::move(list);
  j["all_agree"] = rep.all_agree();
  return j;
}

}  // namespace vogan
