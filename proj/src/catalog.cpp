#include "vogan/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "vogan/graph.hpp"

namespace vogan {

Rational RootRealization::form(const std::vector<Rational>& x,
                               const std::vector<Rational>& y) const {
  if (x.size() != metric.size() || y.size() != metric.size()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector has the wrong dimension");
  }
  Rational s{0};
  for (std::size_t k = 0; k < metric.size(); ++k) s += metric[k] * x[k] * y[k];
  return s;
}

std::vector<std::vector<Rational>> RootRealization::gram() const {
  const std::size_t n = coords.size();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = form(coords[i], coords[j]);
  }
  return g;
}

Parity RootRealization::parity_of(const std::vector<Rational>& v) const {
  if (v.size() != parity_weights.size()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector has the wrong dimension");
  }
  Rational s{0};
  for (std::size_t k = 0; k < v.size(); ++k) s += parity_weights[k] * v[k];
  if (!is_integer(s)) throw Error(ErrorCode::DimensionMismatch, "parity functional is not integral");
  return s.numerator() % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::vector<FamilyTemplate> list_families() {
  return {
      {Family::SL, "sl(m,n)", {"m", "n"},
       "m >= 2, n >= 1, m != n; white part A_m + A_n (sl(m+1|n+1) in rank terms)", Parity::Even},
      {Family::B, "B(m,n)", {"m", "n"}, "m >= 0, n >= 1", Parity::Odd},
      {Family::C, "C(n)", {"n"}, "n >= 2", Parity::Odd},
      {Family::D, "D(m,n)", {"m", "n"}, "m >= 2, n >= 1, (m,n) != (2,1)", Parity::Odd},
      {Family::D21A, "D(2,1;alpha)", {"alpha"},
       "alpha rational, alpha not in {0, -1}; default specialisation 2", Parity::Odd},
      {Family::F4, "F(4)", {}, "none", Parity::Odd},
      {Family::G3, "G(3)", {}, "none", Parity::Odd},
  };
}

void check_params(const FamilySpec& s) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidParams, s.name() + ": " + why);
  };
  switch (s.family) {
    case Family::SL:
      if (s.m < 2 || s.n < 1) fail("requires m >= 2 and n >= 1");
      if (s.m == s.n) fail("m == n is not a catalog entry");
      break;
    case Family::B:
      if (s.m < 0 || s.n < 1) fail("requires m >= 0 and n >= 1");
      break;
    case Family::C:
      if (s.n < 2) fail("requires n >= 2");
      break;
    case Family::D:
      if (s.m < 2 || s.n < 1) fail("requires m >= 2 and n >= 1");
      if (s.m == 2 && s.n == 1) fail("D(2,1) is D(2,1;alpha) with alpha = 1");
      break;
    case Family::D21A:
      if (s.alpha == Rational{0} || s.alpha == Rational{-1}) fail("alpha must not be 0 or -1");
      break;
    case Family::F4:
    case Family::G3:
      break;
  }
  // Bitmask circlings address at most 64 nodes.
  if ((s.family == Family::SL && s.m + s.n + 2 > kMaxNodes) ||
      ((s.family == Family::B || s.family == Family::D) && s.m + s.n + 1 > kMaxNodes) ||
      (s.family == Family::C && s.n + 1 > kMaxNodes)) {
    fail("too many nodes");
  }
}

namespace {

struct Entry {
  Diagram diagram;
  RootRealization realization;
};

class EntryBuilder {
 public:
  EntryBuilder(const FamilySpec& spec, int eps, int del) : eps_(eps) {
    entry_.diagram.family = spec;
    for (int k = 1; k <= eps; ++k) {
      entry_.realization.basis.push_back("e" + std::to_string(k));
      entry_.realization.metric.emplace_back(1);
      entry_.realization.parity_weights.emplace_back(0);
    }
    for (int k = 1; k <= del; ++k) {
      entry_.realization.basis.push_back("d" + std::to_string(k));
      entry_.realization.metric.emplace_back(-1);
      entry_.realization.parity_weights.emplace_back(1);
    }
  }

  RootRealization& realization() { return entry_.realization; }
  int e(int k) const { return k - 1; }
  int d(int k) const { return eps_ + k - 1; }

  // Vector from (basis index, coefficient) pairs.
  std::vector<Rational> vec(std::initializer_list<std::pair<int, Rational>> terms) const {
    std::vector<Rational> v(entry_.realization.basis.size(), Rational{0});
    for (const auto& [idx, c] : terms) v[idx] += c;
    return v;
  }

  NodeId add(Parity parity, Color color, int a, std::vector<Rational> coords) {
    const NodeId id = static_cast<NodeId>(entry_.diagram.nodes.size()) + 1;
    entry_.diagram.nodes.push_back(Node{id, parity, color, a});
    entry_.realization.coords.push_back(std::move(coords));
    return id;
  }
  NodeId even(int a, std::vector<Rational> coords) {
    return add(Parity::Even, Color::White, a, std::move(coords));
  }
  NodeId grey(int a, std::vector<Rational> coords) {
    return add(Parity::Odd, Color::Grey, a, std::move(coords));
  }

  void link(NodeId u, NodeId v, int mult = 1, NodeId longer = 0) {
    if (u > v) std::swap(u, v);
    entry_.diagram.edges.push_back(
        Edge{u, v, mult, longer == 0 ? std::nullopt : std::optional<NodeId>(longer)});
  }

  Entry finish(NodeId lowest) {
    entry_.diagram.lowest = lowest;
    std::sort(entry_.diagram.edges.begin(), entry_.diagram.edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    entry_.diagram.verified = true;
    return std::move(entry_);
  }

 private:
  int eps_;
  Entry entry_;
};

using R = Rational;

// sl(m+1|n+1): cycle e1-e2 ... e_{m+1}-d1 ... d_{n+1}-e1.
Entry build_sl(const FamilySpec& s) {
  const int m = s.m;
  const int n = s.n;
  EntryBuilder b(s, m + 1, n + 1);
  for (int k = 1; k <= m; ++k) b.even(1, b.vec({{b.e(k), R{1}}, {b.e(k + 1), R{-1}}}));
  b.grey(1, b.vec({{b.e(m + 1), R{1}}, {b.d(1), R{-1}}}));
  for (int k = 1; k <= n; ++k) b.even(1, b.vec({{b.d(k), R{1}}, {b.d(k + 1), R{-1}}}));
  const NodeId phi = b.grey(1, b.vec({{b.d(n + 1), R{1}}, {b.e(1), R{-1}}}));
  for (NodeId k = 1; k < phi; ++k) b.link(k, k + 1);
  b.link(1, phi);
  return b.finish(phi);
}

// osp(2m+1|2n), distinguished system read from the ε end.
Entry build_b(const FamilySpec& s) {
  const int m = s.m;
  const int n = s.n;
  EntryBuilder b(s, m, n);
  if (m == 0) {
    b.add(Parity::Odd, Color::Black, 2, b.vec({{b.d(n), R{1}}}));
  } else {
    b.even(2, b.vec({{b.e(m), R{1}}}));
    for (int k = m - 1; k >= 1; --k) b.even(2, b.vec({{b.e(k), R{1}}, {b.e(k + 1), R{-1}}}));
    b.grey(2, b.vec({{b.d(n), R{1}}, {b.e(1), R{-1}}}));
  }
  for (int k = n - 1; k >= 1; --k) b.even(2, b.vec({{b.d(k), R{1}}, {b.d(k + 1), R{-1}}}));
  const NodeId phi = b.even(1, b.vec({{b.d(1), R{-2}}}));

  for (NodeId k = 1; k < phi; ++k) {
    if (k == 1 && m == 0) {
      // δ_n black node: against δ_{n-1}-δ_n (longer) or, for n = 1, φ = -2δ_1.
      b.link(1, 2, n == 1 ? 4 : 2, 2);
    } else if (k == 1 && m >= 1) {
      b.link(1, 2, 2, 2);  // short ε_m, or the grey root when m = 1
    } else if (k + 1 == phi && n >= 2) {
      b.link(k, phi, 2, phi);
    } else {
      b.link(k, k + 1);
    }
  }
  return b.finish(phi);
}

// osp(2|2n-2): C_{n-1} chain closed by a triangle of two grey roots.
Entry build_c(const FamilySpec& s) {
  const int n = s.n;
  EntryBuilder b(s, 1, n - 1);
  const NodeId longest = b.even(1, b.vec({{b.d(n - 1), R{2}}}));
  for (int k = n - 2; k >= 1; --k) b.even(2, b.vec({{b.d(k), R{1}}, {b.d(k + 1), R{-1}}}));
  const NodeId g = b.grey(1, b.vec({{b.e(1), R{1}}, {b.d(1), R{-1}}}));
  const NodeId phi = b.grey(1, b.vec({{b.e(1), R{-1}}, {b.d(1), R{-1}}}));
  for (NodeId k = longest; k < g; ++k) {
    if (k == longest && n >= 3) {
      b.link(k, k + 1, 2, longest);
    } else {
      b.link(k, k + 1);
    }
  }
  b.link(g - 1, phi);
  b.link(g, phi);
  return b.finish(phi);
}

// osp(2m|2n): fork tips first, then the ε chain, grey, δ chain, φ = -2δ_1.
Entry build_d(const FamilySpec& s) {
  const int m = s.m;
  const int n = s.n;
  EntryBuilder b(s, m, n);
  const NodeId tip1 = b.even(1, b.vec({{b.e(m - 1), R{1}}, {b.e(m), R{-1}}}));
  const NodeId tip2 = b.even(1, b.vec({{b.e(m - 1), R{1}}, {b.e(m), R{1}}}));
  for (int k = m - 2; k >= 1; --k) b.even(2, b.vec({{b.e(k), R{1}}, {b.e(k + 1), R{-1}}}));
  const NodeId g = b.grey(2, b.vec({{b.d(n), R{1}}, {b.e(1), R{-1}}}));
  for (int k = n - 1; k >= 1; --k) b.even(2, b.vec({{b.d(k), R{1}}, {b.d(k + 1), R{-1}}}));
  const NodeId phi = b.even(1, b.vec({{b.d(1), R{-2}}}));

  const NodeId fork = tip2 + 1;  // ε_{m-2}-ε_{m-1}, or the grey node when m = 2
  b.link(tip1, fork);
  b.link(tip2, fork);
  for (NodeId k = fork; k < phi; ++k) {
    if (k + 1 == phi && n >= 2) {
      b.link(k, phi, 2, phi);
    } else {
      b.link(k, k + 1);
    }
  }
  (void)g;
  return b.finish(phi);
}

// Star: grey ε1-ε2-ε3 joined to 2ε2, 2ε3 and φ = -2ε1.
Entry build_d21a(const FamilySpec& s) {
  EntryBuilder b(s, 3, 0);
  auto& r = b.realization();
  r.metric = {Rational{-1} - s.alpha, Rational{1}, s.alpha};
  r.parity_weights = {R{1}, R{0}, R{0}};
  const NodeId l1 = b.even(1, b.vec({{b.e(2), R{2}}}));
  const NodeId l2 = b.even(1, b.vec({{b.e(3), R{2}}}));
  const NodeId c = b.grey(2, b.vec({{b.e(1), R{1}}, {b.e(2), R{-1}}, {b.e(3), R{-1}}}));
  const NodeId phi = b.even(1, b.vec({{b.e(1), R{-2}}}));
  b.link(l1, c);
  b.link(l2, c);
  b.link(c, phi);
  return b.finish(phi);
}

// B3 chain, grey ½(δ-ε1-ε2-ε3), φ = -δ with (δ,δ) = -3.
Entry build_f4(const FamilySpec& s) {
  EntryBuilder b(s, 3, 1);
  auto& r = b.realization();
  r.metric.back() = R{-3};
  r.parity_weights.back() = R{2};
  const R half{1, 2};
  b.even(1, b.vec({{b.e(1), R{1}}, {b.e(2), R{-1}}}));
  b.even(2, b.vec({{b.e(2), R{1}}, {b.e(3), R{-1}}}));
  b.even(3, b.vec({{b.e(3), R{1}}}));
  b.grey(2, b.vec({{b.d(1), half}, {b.e(1), -half}, {b.e(2), -half}, {b.e(3), -half}}));
  const NodeId phi = b.even(1, b.vec({{b.d(1), R{-1}}}));
  b.link(1, 2);
  b.link(2, 3, 2, 2);
  b.link(3, 4);
  b.link(4, phi);
  return b.finish(phi);
}

// G2 in the plane x1+x2+x3 = 0, sl2 weight δ' = d1 + d2 so that (δ',δ') = -2.
Entry build_g3(const FamilySpec& s) {
  EntryBuilder b(s, 3, 2);
  auto& r = b.realization();
  r.parity_weights.back() = R{0};  // d1 alone carries the grading
  b.even(2, b.vec({{b.e(1), R{-2}}, {b.e(2), R{1}}, {b.e(3), R{1}}}));
  b.even(4, b.vec({{b.e(1), R{1}}, {b.e(2), R{-1}}}));
  b.grey(2, b.vec({{b.e(2), R{1}}, {b.e(3), R{-1}}, {b.d(1), R{1}}, {b.d(2), R{1}}}));
  const NodeId phi = b.even(1, b.vec({{b.d(1), R{-2}}, {b.d(2), R{-2}}}));
  b.link(1, 2, 3, 1);
  b.link(2, 3);
  b.link(3, phi);
  return b.finish(phi);
}

Entry build_entry(const FamilySpec& spec) {
  check_params(spec);
  switch (spec.family) {
    case Family::SL: return build_sl(spec);
    case Family::B: return build_b(spec);
    case Family::C: return build_c(spec);
    case Family::D: return build_d(spec);
    case Family::D21A: return build_d21a(spec);
    case Family::F4: return build_f4(spec);
    case Family::G3: return build_g3(spec);
  }
  throw Error(ErrorCode::InvalidParams, "unknown family");
}

std::vector<std::pair<char, int>> parse_type(const std::string& type) {
  std::vector<std::pair<char, int>> out;
  std::stringstream ss(type);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part.size() >= 2) out.emplace_back(part[0], std::stoi(part.substr(1)));
  }
  return out;
}

std::string join_types(std::vector<std::pair<char, int>> parts) {
  std::vector<std::pair<char, int>> norm;
  for (auto [t, r] : parts) {
    if (r <= 0) continue;
    if ((t == 'B' || t == 'C') && r == 1) t = 'A';
    if (t == 'D' && r == 2) {
      norm.emplace_back('A', 1);
      norm.emplace_back('A', 1);
      continue;
    }
    if (t == 'D' && r == 3) t = 'A';
    norm.emplace_back(t, r);
  }
  std::string s;
  for (auto [t, r] : norm) {
    if (!s.empty()) s += '+';
    s += t;
    s += std::to_string(r);
  }
  return s;
}

std::vector<std::vector<NodeId>> even_components(const Diagram& d) {
  std::vector<std::vector<NodeId>> comps;
  std::vector<bool> seen(d.size() + 1, false);
  for (NodeId start : d.even_nodes()) {
    if (seen[start]) continue;
    std::vector<NodeId> comp;
    std::queue<NodeId> q;
    q.push(start);
    seen[start] = true;
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop();
      comp.push_back(x);
      for (NodeId y : d.neighbors(x)) {
        if (!seen[y] && d.node(y).parity == Parity::Even) {
          seen[y] = true;
          q.push(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Multiplicity implied by the form; 0 when the roots are orthogonal.
std::optional<int> implied_multiplicity(const Rational& bab, const Rational& baa,
                                        const Rational& bbb) {
  if (bab == Rational{0}) return 0;
  auto cartan = [](const Rational& x) { return boost::abs(Rational{2} * x); };
  Rational mult;
  if (baa != Rational{0} && bbb != Rational{0}) {
    mult = std::max(cartan(bab / baa), cartan(bab / bbb));
  } else if (baa != Rational{0}) {
    mult = cartan(bab / baa);
  } else if (bbb != Rational{0}) {
    mult = cartan(bab / bbb);
  } else {
    mult = Rational{1};
  }
  if (!is_integer(mult)) return std::nullopt;
  return static_cast<int>(mult.numerator());
}

}  // namespace

Diagram build_preferred_diagram(const FamilySpec& spec) { return build_entry(spec).diagram; }

RootRealization root_realization(const FamilySpec& spec) { return build_entry(spec).realization; }

bool verify_marks(const Diagram& d, const RootRealization& r) {
  if (static_cast<int>(r.coords.size()) != d.size()) {
    throw Error(ErrorCode::DimensionMismatch, "realization has " + std::to_string(r.coords.size()) +
                                                  " roots, diagram has " + std::to_string(d.size()));
  }
  int gcd = 0;
  std::vector<Rational> sum(r.dimension(), Rational{0});
  for (const Node& n : d.nodes) {
    if (n.a_label <= 0) return false;
    gcd = std::gcd(gcd, n.a_label);
    const auto& v = r.coords[n.id - 1];
    if (static_cast<int>(v.size()) != r.dimension()) {
      throw Error(ErrorCode::DimensionMismatch, "root coordinate vector has the wrong dimension");
    }
    for (int k = 0; k < r.dimension(); ++k) sum[k] += Rational{n.a_label} * v[k];
  }
  if (gcd != 1) return false;
  return std::all_of(sum.begin(), sum.end(), [](const Rational& x) { return x == Rational{0}; });
}

int center_dimension(const FamilySpec& spec) {
  return spec.family == Family::SL || spec.family == Family::C ? 1 : 0;
}

std::string expected_g0ss_type(const FamilySpec& s) {
  switch (s.family) {
    case Family::SL: return join_types({{'A', s.m}, {'A', s.n}});
    case Family::B: return join_types({{'B', s.m}, {'C', s.n}});
    case Family::C: return join_types({{'C', s.n - 1}});
    case Family::D: return join_types({{'D', s.m}, {'C', s.n}});
    case Family::D21A: return "A1+A1+A1";
    case Family::F4: return "B3+A1";
    case Family::G3: return "G2+A1";
  }
  return "";
}

int odd_removed_components(const Diagram& d) { return static_cast<int>(even_components(d).size()); }

CatalogCheck check_catalog_entry(const Diagram& d, const RootRealization& r) {
  CatalogCheck out;
  auto note = [&](const std::string& s) { out.problems.push_back(d.family.name() + ": " + s); };

  try {
    validate_structure(d);
    out.structure = true;
  } catch (const Error& e) {
    note(e.what());
  }
  try {
    out.marks = verify_marks(d, r);
    if (!out.marks) note("a-labels do not satisfy sum a_i alpha_i = 0 with gcd 1");
  } catch (const Error& e) {
    note(e.what());
    return out;
  }

  const auto gram = r.gram();
  out.edges_match_form = true;
  out.longer_matches_form = true;
  for (NodeId a = 1; a <= d.size(); ++a) {
    for (NodeId b = a + 1; b <= d.size(); ++b) {
      const Edge* e = d.edge_between(a, b);
      const auto mult = implied_multiplicity(gram[a - 1][b - 1], gram[a - 1][a - 1], gram[b - 1][b - 1]);
      const int have = e ? e->multiplicity : 0;
      if (!mult || *mult != have) {
        out.edges_match_form = false;
        note("edge " + std::to_string(a) + "-" + std::to_string(b) + " multiplicity " +
             std::to_string(have) + " disagrees with the form");
      }
      if (e && e->longer && gram[a - 1][a - 1] != Rational{0} && gram[b - 1][b - 1] != Rational{0}) {
        const NodeId shorter = e->other(*e->longer);
        if (!(boost::abs(gram[*e->longer - 1][*e->longer - 1]) >
              boost::abs(gram[shorter - 1][shorter - 1]))) {
          out.longer_matches_form = false;
          note("edge " + std::to_string(a) + "-" + std::to_string(b) + " longer endpoint is not longer");
        }
      }
    }
  }

  out.parity_matches = true;
  out.colors_match = true;
  for (const Node& n : d.nodes) {
    if (r.parity_of(r.coords[n.id - 1]) != n.parity) {
      out.parity_matches = false;
      note("node " + std::to_string(n.id) + " parity disagrees with the realization");
    }
    const bool isotropic = gram[n.id - 1][n.id - 1] == Rational{0};
    const Color want = n.parity == Parity::Even ? Color::White : (isotropic ? Color::Grey : Color::Black);
    if (want != n.color || (n.parity == Parity::Even && isotropic)) {
      out.colors_match = false;
      note("node " + std::to_string(n.id) + " colour disagrees with its norm");
    }
  }

  out.center_dimension =
      static_cast<int>(d.dark_nodes().size()) - 1 == center_dimension(d.family);
  if (!out.center_dimension) note("dark node count does not match the centre dimension");

  auto comps = even_components(d);
  auto expected = parse_type(expected_g0ss_type(d.family));
  std::vector<bool> used(comps.size(), false);
  out.g0ss_shape = expected.size() == comps.size();
  for (auto [t, rank] : expected) {
    bool matched = false;
    const LabeledGraph want = dynkin_shape(t, rank);
    for (std::size_t k = 0; k < comps.size() && !matched; ++k) {
      if (!used[k] && isomorphic(induced_shape(d, comps[k]), want)) {
        used[k] = true;
        matched = true;
      }
    }
    out.g0ss_shape = out.g0ss_shape && matched;
  }
  if (!out.g0ss_shape) note("white part is not of type " + expected_g0ss_type(d.family));
  return out;
}

std::vector<FamilySpec> catalog_instances(int max_rank, int max_sl) {
  std::vector<FamilySpec> out;
  for (int total = 3; total <= max_sl; ++total) {
    for (int m = 2; m < total; ++m) {
      const int n = total - m;
      if (n >= 1 && m != n) out.push_back(make_spec(Family::SL, m, n));
    }
  }
  for (int total = 1; total <= max_rank; ++total) {
    for (int m = 0; m < total; ++m) out.push_back(make_spec(Family::B, m, total - m));
  }
  for (int n = 2; n <= max_rank; ++n) out.push_back(make_spec(Family::C, 0, n));
  for (int total = 3; total <= max_rank; ++total) {
    for (int m = 2; m < total; ++m) {
      if (!(m == 2 && total - m == 1)) out.push_back(make_spec(Family::D, m, total - m));
    }
  }
  out.push_back(make_spec(Family::D21A));
  out.push_back(make_spec(Family::F4));
  out.push_back(make_spec(Family::G3));
  return out;
}

}  // namespace vogan
