#include "vogan/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "vogan/graph.hpp"

namespace vogan {

namespace {

std::uint64_t bit(NodeId id) { return std::uint64_t{1} << (id - 1); }

// Per-diagram lookup tables used by every search.
struct PressTable {
  std::uint64_t even = 0;
  std::vector<std::uint64_t> toggles;  // indexed by id; 0 for odd vertices

  explicit PressTable(const Diagram& d) : toggles(d.size() + 1, 0) {
    for (const Node& n : d.nodes) {
      if (n.parity == Parity::Even) {
        even |= bit(n.id);
        toggles[n.id] = toggle_mask(d, n.id);
      }
    }
  }

  template <typename F>
  void for_each_press(std::uint64_t c, F&& f) const {
    std::uint64_t p = c & even;
    while (p != 0) {
      const int idx = __builtin_ctzll(p);
      p &= p - 1;
      f(idx + 1, c ^ toggles[idx + 1]);
    }
  }
};

struct Search {
  std::vector<std::uint64_t> order;
  std::unordered_map<std::uint64_t, OrbitStep> log;
};

// Breadth-first closure of `seed` under presses; stops once `target` is seen.
Search bfs(const PressTable& t, std::uint64_t seed, std::uint64_t cap,
           std::optional<std::uint64_t> target = std::nullopt) {
  Search s;
  s.order.push_back(seed);
  s.log.emplace(seed, OrbitStep{Circling(seed), 0});
  if (target && *target == seed) return s;
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    const std::uint64_t cur = s.order[head];
    bool done = false;
    t.for_each_press(cur, [&](NodeId i, std::uint64_t next) {
      if (done || s.log.count(next) != 0) return;
      s.log.emplace(next, OrbitStep{Circling(cur), i});
      s.order.push_back(next);
      if (target && *target == next) done = true;
    });
    if (done) break;
    if (s.order.size() > cap) {
      throw Error(ErrorCode::CapExceeded,
                  "orbit exceeds the enumeration cap of " + std::to_string(cap) + " circlings");
    }
  }
  return s;
}

PressSequence trace(const std::unordered_map<std::uint64_t, OrbitStep>& log, std::uint64_t seed,
                    std::uint64_t target) {
  PressSequence seq;
  std::uint64_t cur = target;
  while (cur != seed) {
    const OrbitStep& st = log.at(cur);
    seq.steps.push_back(st.pressed);
    cur = st.predecessor.bits();
  }
  std::reverse(seq.steps.begin(), seq.steps.end());
  return seq;
}

PressSequence reversed(PressSequence s) {
  std::reverse(s.steps.begin(), s.steps.end());
  return s;
}

void require_admissible(const Diagram& d, Circling c) {
  validate_circling(d, c);
  if (!is_admissible(d, c)) {
    throw Error(ErrorCode::NotAdmissible, "circling is not admissible for " + d.family.name());
  }
}

}  // namespace

Circling Circling::from_ids(const std::vector<NodeId>& ids) {
  std::uint64_t b = 0;
  for (NodeId id : ids) {
    if (id < 1 || id > kMaxNodes) {
      throw Error(ErrorCode::InvalidCircling, "vertex id " + std::to_string(id) + " out of range");
    }
    b |= bit(id);
  }
  return Circling(b);
}

std::vector<NodeId> Circling::ids() const {
  std::vector<NodeId> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctzll(b) + 1);
  return out;
}

bool circling_less(Circling a, Circling b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.ids() < b.ids();
}

Circling Symmetry::apply(Circling c) const {
  std::uint64_t out = 0;
  for (NodeId id : c.ids()) out |= bit((*this)(id));
  return Circling(out);
}

bool Symmetry::is_identity() const {
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] != static_cast<NodeId>(k) + 1) return false;
  }
  return true;
}

Symmetry identity_symmetry(const Diagram& d) {
  Symmetry s;
  for (NodeId id = 1; id <= d.size(); ++id) s.perm.push_back(id);
  return s;
}

PressSequence OrbitReport::path_to(Circling target) const {
  if (!contains(target)) throw Error(ErrorCode::InvalidCircling, "circling is not in the orbit");
  PressSequence seq;
  Circling cur = target;
  while (cur != seed) {
    const OrbitStep& st = generator_log.at(cur.bits());
    seq.steps.push_back(st.pressed);
    cur = st.predecessor;
  }
  std::reverse(seq.steps.begin(), seq.steps.end());
  return seq;
}

EngineOptions EngineOptions::from_environment() {
  EngineOptions o;
  if (const char* env = std::getenv("VOGAN_ORBIT_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) o.cap = v;
    } catch (const std::exception&) {
      // unparsable value: keep the default
    }
  }
  return o;
}

void validate_circling(const Diagram& d, Circling c) {
  for (NodeId id : c.ids()) {
    if (!d.has_node(id)) {
      throw Error(ErrorCode::InvalidCircling, "circled vertex " + std::to_string(id) + " does not exist");
    }
    if (d.node(id).parity != Parity::Even) {
      throw Error(ErrorCode::InvalidCircling,
                  "vertex " + std::to_string(id) + " is odd; odd roots are never circled");
    }
  }
}

Circling make_circling(const Diagram& d, const std::vector<NodeId>& ids) {
  Circling c = Circling::from_ids(ids);
  validate_circling(d, c);
  return c;
}

bool is_admissible(const Diagram& d, Circling c) {
  validate_circling(d, c);
  int sum = 0;
  for (NodeId id : c.ids()) {
    if (id != d.lowest) sum += d.node(id).a_label;
  }
  const Parity p = sum % 2 == 0 ? Parity::Even : Parity::Odd;
  return p == d.family.parity_rule;
}

std::vector<NodeId> pressable(const Diagram& d, Circling c) {
  validate_circling(d, c);
  return c.ids();  // every circled vertex is even
}

std::uint64_t toggle_mask(const Diagram& d, NodeId i) {
  std::uint64_t m = 0;
  for (const Edge& e : d.edges) {
    if (!e.touches(i)) continue;
    const NodeId j = e.other(i);
    if (d.node(j).parity == Parity::Odd) continue;
    if (e.multiplicity == 2 && e.longer == j) continue;
    m |= bit(j);
  }
  return m;
}

Circling press(const Diagram& d, Circling c, NodeId i) {
  if (!d.has_node(i)) throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(i));
  validate_circling(d, c);
  if (d.node(i).parity != Parity::Even) {
    throw Error(ErrorCode::NotPressable, "vertex " + std::to_string(i) + " is odd");
  }
  if (!c.contains(i)) {
    throw Error(ErrorCode::NotPressable, "vertex " + std::to_string(i) + " is not circled");
  }
  return Circling(c.bits() ^ toggle_mask(d, i));
}

Circling replay(const Diagram& d, Circling c, const PressSequence& seq) {
  for (NodeId i : seq.steps) c = press(d, c, i);
  return c;
}

OrbitReport f_orbit(const Diagram& d, Circling c, const EngineOptions& opts) {
  validate_circling(d, c);
  const PressTable table(d);
  Search s = bfs(table, c.bits(), opts.cap);
  OrbitReport r;
  r.seed = c;
  r.min_size = c.size();
  for (std::uint64_t b : s.order) {
    r.orbit.emplace_back(b);
    r.min_size = std::min(r.min_size, Circling(b).size());
  }
  r.generator_log.insert(s.log.begin(), s.log.end());
  return r;
}

std::optional<PressSequence> f_related(const Diagram& d, Circling c1, Circling c2,
                                       const EngineOptions& opts) {
  validate_circling(d, c1);
  validate_circling(d, c2);
  const PressTable table(d);
  Search s = bfs(table, c1.bits(), opts.cap, c2.bits());
  if (s.log.count(c2.bits()) == 0) return std::nullopt;
  return trace(s.log, c1.bits(), c2.bits());
}

Reduction reduce(const Diagram& d, Circling c, const EngineOptions& opts) {
  require_admissible(d, c);
  const PressTable table(d);
  Search s = bfs(table, c.bits(), opts.cap);
  std::uint64_t best = c.bits();
  for (std::uint64_t b : s.order) {
    if (circling_less(Circling(b), Circling(best))) best = b;
  }
  return Reduction{Circling(best), trace(s.log, c.bits(), best)};
}

std::vector<Symmetry> automorphisms(const Diagram& d) {
  const LabeledGraph g = to_labeled_graph(d);
  std::vector<Symmetry> out;
  for_each_isomorphism(g, g, [&](const std::vector<int>& map) {
    Symmetry s;
    for (int v : map) s.perm.push_back(v + 1);
    s.fixes_lowest = s(d.lowest) == d.lowest;
    out.push_back(std::move(s));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Symmetry& a, const Symmetry& b) { return a.perm < b.perm; });
  return out;
}

Equivalence equivalent(const Diagram& d, Circling c1, Circling c2, const EngineOptions& opts) {
  require_admissible(d, c1);
  require_admissible(d, c2);
  const PressTable table(d);
  Search s = bfs(table, c2.bits(), opts.cap);
  for (const Symmetry& sigma : automorphisms(d)) {
    const Circling image = sigma.apply(c1);
    if (s.log.count(image.bits()) != 0) {
      return Equivalence{true, sigma, reversed(trace(s.log, c2.bits(), image.bits()))};
    }
  }
  return Equivalence{};
}

std::vector<EquivalenceClass> classify(const Diagram& d, const EngineOptions& opts) {
  const PressTable table(d);
  const auto evens = d.even_nodes();
  if (evens.size() >= 63 || (std::uint64_t{1} << evens.size()) > opts.cap) {
    throw Error(ErrorCode::CapExceeded, "classify would enumerate 2^" + std::to_string(evens.size()) +
                                            " circlings, above the cap of " + std::to_string(opts.cap));
  }
  const auto syms = automorphisms(d);
  auto admissible = [&](std::uint64_t b) { return is_admissible(d, Circling(b)); };

  std::unordered_set<std::uint64_t> assigned;
  std::vector<EquivalenceClass> classes;
  const std::uint64_t total = std::uint64_t{1} << evens.size();
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t c = 0;
    for (std::size_t j = 0; j < evens.size(); ++j) {
      if ((k >> j) & 1U) c |= bit(evens[j]);
    }
    if (assigned.count(c) != 0 || !admissible(c)) continue;

    EquivalenceClass cls;
    for (const Symmetry& sigma : syms) {
      const std::uint64_t start = sigma.apply(Circling(c)).bits();
      if (assigned.count(start) != 0) continue;
      Search orbit = bfs(table, start, opts.cap);
      bool has_adm = false;
      bool has_inadm = false;
      for (std::uint64_t x : orbit.order) {
        assigned.insert(x);
        if (admissible(x)) {
          has_adm = true;
          cls.members.emplace_back(x);
        } else {
          has_inadm = true;
        }
      }
      if (has_adm && has_inadm) cls.parity_mixed = true;
    }
    std::sort(cls.members.begin(), cls.members.end(), circling_less);
    cls.representative = cls.members.front();

    Search from_rep = bfs(table, cls.representative.bits(), opts.cap);
    for (Circling m : cls.members) {
      for (const Symmetry& sigma : syms) {
        const Circling image = sigma.apply(m);
        if (from_rep.log.count(image.bits()) != 0) {
          cls.witness.emplace(m.bits(), std::pair(sigma, reversed(trace(from_rep.log,
                                                                         cls.representative.bits(),
                                                                         image.bits()))));
          break;
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const EquivalenceClass& a, const EquivalenceClass& b) {
    return circling_less(a.representative, b.representative);
  });
  return classes;
}

bool ReflectionReport::all_agree() const {
  return std::all_of(neighbors.begin(), neighbors.end(), [](const NeighborReflection& n) {
    return n.agrees && n.n_in_range && n.parity_preserved;
  });
}

ReflectionReport reflection_report(const Diagram& d, const RootRealization& r, Circling c, NodeId i) {
  if (static_cast<int>(r.coords.size()) != d.size()) {
    throw Error(ErrorCode::DimensionMismatch, "realization does not match the diagram");
  }
  press(d, c, i);  // pressability check
  ReflectionReport rep;
  rep.vertex = i;
  rep.norm = r.form(i, i);
  if (rep.norm == Rational{0}) {
    throw Error(ErrorCode::ZeroNorm, "vertex " + std::to_string(i) + " has zero norm");
  }
  const std::uint64_t toggles = toggle_mask(d, i);
  const auto& alpha = r.coords[i - 1];
  for (NodeId j : d.neighbors(i)) {
    NeighborReflection nb;
    nb.neighbor = j;
    nb.parity = d.node(j).parity;
    nb.n = Rational{2} * r.form(j, i) / rep.norm;
    nb.n_in_range = nb.n == Rational{-1} || nb.n == Rational{-2} || nb.n == Rational{-3};
    if (is_integer(nb.n)) {
      std::vector<Rational> image = r.coords[j - 1];
      for (std::size_t k = 0; k < image.size(); ++k) image[k] -= nb.n * alpha[k];
      nb.parity_preserved = r.parity_of(image) == r.parity_of(r.coords[j - 1]);
      nb.reflection_toggles = nb.parity == Parity::Even && nb.n.numerator() % 2 != 0;
    }
    nb.press_toggles = (toggles & bit(j)) != 0;
    nb.agrees = nb.reflection_toggles == nb.press_toggles;
    rep.neighbors.push_back(nb);
  }
  return rep;
}

}  // namespace vogan
