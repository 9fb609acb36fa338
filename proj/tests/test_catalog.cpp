#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "vogan/catalog.hpp"
#include "vogan/graph.hpp"

using namespace vogan;

namespace {

Diagram build(Family f, int m = 0, int n = 0) { return build_preferred_diagram(make_spec(f, m, n)); }

// Primitive positive integer kernel vector of the node coordinate matrix,
// computed by plain rational row reduction. Empty if the kernel is not a
// single positive ray.
std::vector<long> kernel_labels(const RootRealization& r) {
  const int rows = r.dimension();
  const int cols = static_cast<int>(r.coords.size());
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (int c = 0; c < cols; ++c) {
    for (int k = 0; k < rows; ++k) a[k][c] = r.coords[c][k];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = row;
    while (p < rows && a[p][c] == Rational{0}) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    const Rational lead = a[row][c];
    for (auto& x : a[row]) x /= lead;
    for (int k = 0; k < rows; ++k) {
      if (k == row || a[k][c] == Rational{0}) continue;
      const Rational f = a[k][c];
      for (int j = 0; j < cols; ++j) a[k][j] -= f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (cols - static_cast<int>(pivot_col.size()) != 1) return {};
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> v(cols, Rational{0});
  v[free_col] = 1;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][free_col];
  long den = 1;
  for (const auto& x : v) den = std::lcm(den, static_cast<long>(x.denominator()));
  std::vector<long> out;
  long g = 0;
  for (const auto& x : v) {
    out.push_back(static_cast<long>(x.numerator()) * (den / x.denominator()));
    g = std::gcd(g, std::labs(out.back()));
  }
  const bool negative = out[0] < 0;
  for (auto& x : out) x = (negative ? -x : x) / g;
  for (long x : out) {
    if (x <= 0) return {};
  }
  return out;
}

std::vector<NodeId> ids_with(const Diagram& d, Color c) {
  std::vector<NodeId> out;
  for (const Node& n : d.nodes) {
    if (n.color == c) out.push_back(n.id);
  }
  return out;
}

}  // namespace

TEST_CASE("SL(3,2) preferred diagram is the seven-cycle with two grey roots") {
  const Diagram d = build(Family::SL, 3, 2);
  CHECK(d.size() == 7);
  CHECK(d.lowest == 7);
  CHECK(ids_with(d, Color::Grey) == std::vector<NodeId>{4, 7});
  CHECK(d.edges.size() == 7);
  for (NodeId k = 1; k <= 7; ++k) {
    CHECK(d.neighbors(k).size() == 2);
    CHECK(d.node(k).a_label == 1);
  }
  CHECK(d.edge_between(1, 7) != nullptr);
  CHECK(odd_removed_components(d) == 2);
}

TEST_CASE("SL(3,2) gram matrix matches hand values") {
  const RootRealization r = root_realization(make_spec(Family::SL, 3, 2));
  // rows: e1-e2, e2-e3, e3-e4, e4-d1, d1-d2, d2-d3, d3-e1 with d's negative
  const std::vector<std::vector<int>> expected = {
      {2, -1, 0, 0, 0, 0, -1},  {-1, 2, -1, 0, 0, 0, 0},  {0, -1, 2, -1, 0, 0, 0},
      {0, 0, -1, 0, 1, 0, 0},   {0, 0, 0, 1, -2, 1, 0},   {0, 0, 0, 0, 1, -2, 1},
      {-1, 0, 0, 0, 0, 1, 0},
  };
  const auto g = r.gram();
  REQUIRE(g.size() == 7);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) CHECK(g[i][j] == Rational{expected[i][j]});
  }
}

TEST_CASE("SL(4,3) preferred diagram is a nine-cycle with odd nodes 5 and 9") {
  const Diagram d = build(Family::SL, 4, 3);
  CHECK(d.size() == 9);
  CHECK(ids_with(d, Color::Grey) == std::vector<NodeId>{5, 9});
  CHECK(d.lowest == 9);
}

TEST_CASE("D(5,3) layout: fork into 3, chain to 8, double edge to phi, grey 6") {
  const Diagram d = build(Family::D, 5, 3);
  REQUIRE(d.size() == 9);
  CHECK(d.lowest == 9);
  CHECK(d.neighbors(3) == std::vector<NodeId>{1, 2, 4});
  CHECK(d.neighbors(1) == std::vector<NodeId>{3});
  CHECK(d.neighbors(2) == std::vector<NodeId>{3});
  for (NodeId k = 3; k < 8; ++k) CHECK(d.edge_between(k, k + 1) != nullptr);
  const Edge* e = d.edge_between(8, 9);
  REQUIRE(e != nullptr);
  CHECK(e->multiplicity == 2);
  CHECK(e->longer == 9);
  CHECK(ids_with(d, Color::Grey) == std::vector<NodeId>{6});
  CHECK(odd_removed_components(d) == 2);
}

TEST_CASE("D(5,3) double edge agrees with squared lengths") {
  const RootRealization r = root_realization(make_spec(Family::D, 5, 3));
  CHECK(abs(r.form(9, 9)) > abs(r.form(8, 8)));
  CHECK(Rational{2} * r.form(9, 8) / r.form(8, 8) == Rational{-2});
  CHECK(Rational{2} * r.form(8, 9) / r.form(9, 9) == Rational{-1});
}

TEST_CASE("D(4,2) has seven nodes, a fork, one grey node and a double edge into phi") {
  const Diagram d = build(Family::D, 4, 2);
  CHECK(d.size() == 7);
  CHECK(d.neighbors(3).size() == 3);
  CHECK(ids_with(d, Color::Grey).size() == 1);
  const Edge* e = d.edge_between(6, 7);
  REQUIRE(e != nullptr);
  CHECK(e->multiplicity == 2);
  CHECK(e->longer == d.lowest);
}

TEST_CASE("a-labels equal the primitive kernel of the root coordinates") {
  for (const FamilySpec& s : catalog_instances()) {
    CAPTURE(s.name());
    const Diagram d = build_preferred_diagram(s);
    const RootRealization r = root_realization(s);
    const auto labels = kernel_labels(r);
    REQUIRE(labels.size() == d.nodes.size());
    for (const Node& n : d.nodes) CHECK(n.a_label == labels[n.id - 1]);
  }
}

TEST_CASE("every catalog entry passes its consistency checks") {
  const auto all = catalog_instances();
  CHECK(all.size() == 91);
  for (const FamilySpec& s : all) {
    CAPTURE(s.name());
    const Diagram d = build_preferred_diagram(s);
    const CatalogCheck c = check_catalog_entry(d, root_realization(s));
    for (const auto& p : c.problems) MESSAGE(p);
    CHECK(c.ok());
  }
}

TEST_CASE("dark node count minus one is the recorded centre dimension") {
  for (const FamilySpec& s : catalog_instances()) {
    CAPTURE(s.name());
    const Diagram d = build_preferred_diagram(s);
    CHECK(static_cast<int>(d.dark_nodes().size()) - 1 == center_dimension(s));
  }
}

TEST_CASE("expected g0ss types") {
  CHECK(expected_g0ss_type(make_spec(Family::SL, 3, 2)) == "A3+A2");
  CHECK(expected_g0ss_type(make_spec(Family::D, 5, 3)) == "D5+C3");
  CHECK(expected_g0ss_type(make_spec(Family::F4)) == "B3+A1");
  CHECK(expected_g0ss_type(make_spec(Family::G3)) == "G2+A1");
  CHECK(expected_g0ss_type(make_spec(Family::D21A)) == "A1+A1+A1");
}

TEST_CASE("exceptional diagrams") {
  const Diagram f4 = build(Family::F4);
  CHECK(f4.size() == 5);
  CHECK(f4.edge_between(2, 3)->multiplicity == 2);
  const Diagram g3 = build(Family::G3);
  CHECK(g3.size() == 4);
  CHECK(g3.edge_between(1, 2)->multiplicity == 3);
  const Diagram d21 = build_preferred_diagram(make_spec(Family::D21A, 0, 0, Rational{-1, 3}));
  CHECK(d21.neighbors(3).size() == 3);
  CHECK(check_catalog_entry(d21, root_realization(d21.family)).ok());
}

TEST_CASE("verify_marks rejects doubled and perturbed labels") {
  const FamilySpec s = make_spec(Family::SL, 3, 2);
  const RootRealization r = root_realization(s);
  Diagram d = build_preferred_diagram(s);
  CHECK(verify_marks(d, r));
  Diagram doubled = d;
  for (Node& n : doubled.nodes) n.a_label *= 2;
  CHECK_FALSE(verify_marks(doubled, r));
  Diagram bumped = d;
  bumped.nodes[2].a_label += 1;
  CHECK_FALSE(verify_marks(bumped, r));
  RootRealization short_r = r;
  short_r.coords.pop_back();
  CHECK_THROWS_AS(verify_marks(d, short_r), Error);
}

TEST_CASE("invalid parameters are rejected") {
  auto code_of = [](Family f, int m, int n) {
    try {
      build_preferred_diagram(make_spec(f, m, n));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  CHECK(code_of(Family::SL, 0, 2) == ErrorCode::InvalidParams);
  CHECK(code_of(Family::SL, 2, 2) == ErrorCode::InvalidParams);
  CHECK(code_of(Family::C, 0, 1) == ErrorCode::InvalidParams);
  CHECK(code_of(Family::D, 1, 2) == ErrorCode::InvalidParams);
  CHECK(code_of(Family::B, 0, 0) == ErrorCode::InvalidParams);
  CHECK_THROWS_AS(build_preferred_diagram(make_spec(Family::D21A, 0, 0, Rational{0})), Error);
  CHECK_THROWS_AS(build_preferred_diagram(make_spec(Family::D21A, 0, 0, Rational{-1})), Error);
}

TEST_CASE("construction is deterministic") {
  for (const FamilySpec& s : catalog_instances(6, 6)) {
    CHECK(build_preferred_diagram(s) == build_preferred_diagram(s));
  }
}

TEST_CASE("family list covers the seven families with default rules") {
  const auto fams = list_families();
  REQUIRE(fams.size() == 7);
  for (const auto& t : fams) CHECK(t.default_parity == (t.family == Family::SL ? Parity::Even : Parity::Odd));
}

TEST_CASE("validate_structure rejects malformed diagrams") {
  Diagram d = build(Family::SL, 3, 2);
  Diagram bad = d;
  bad.nodes[0].color = Color::Grey;
  CHECK_THROWS_AS(validate_structure(bad), Error);
  bad = d;
  bad.edges.push_back(bad.edges.front());
  CHECK_THROWS_AS(validate_structure(bad), Error);
  bad = d;
  bad.edges.front().multiplicity = 2;
  CHECK_THROWS_AS(validate_structure(bad), Error);
  bad = d;
  bad.lowest = 12;
  CHECK_THROWS_AS(validate_structure(bad), Error);
}

TEST_CASE("standard shapes used by the g0ss check") {
  CHECK(isomorphic(dynkin_shape('D', 3), dynkin_shape('A', 3)));
  CHECK_FALSE(isomorphic(dynkin_shape('B', 3), dynkin_shape('C', 3)));
  CHECK(dynkin_shape('D', 5).degree(2) == 3);
}
