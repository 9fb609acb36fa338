#pragma once

#include <string>
#include <vector>

#include "vogan/types.hpp"

namespace vogan {

// Coordinates of the diagram's roots in an ε/δ basis under a diagonal form.
// metric[k] is B(e_k, e_k): +1 on ε coordinates, −1 on δ coordinates
// (D(2,1;α) uses (−1−α, 1, α)).
struct RootRealization {
  std::vector<std::string> basis;             // e.g. "e1", "d2"
  std::vector<Rational> metric;               // diagonal of the form
  std::vector<std::vector<Rational>> coords;  // coords[id - 1]
  std::vector<Rational> parity_weights;       // parity(v) = (w . v) mod 2

  int dimension() const { return static_cast<int>(basis.size()); }
  Rational form(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  Rational form(NodeId a, NodeId b) const { return form(coords.at(a - 1), coords.at(b - 1)); }
  std::vector<std::vector<Rational>> gram() const;
  // Throws Error(DimensionMismatch) when w . v is not an integer.
  Parity parity_of(const std::vector<Rational>& v) const;
};

// Catalog template for a family: parameter names, constraints, default rule.
struct FamilyTemplate {
  Family family;
  std::string display;      // "sl(m,n)", "D(2,1;alpha)", ...
  std::vector<std::string> params;
  std::string constraints;
  Parity default_parity;
};

std::vector<FamilyTemplate> list_families();

// Throws Error(InvalidParams) when the family's constraints are violated.
void check_params(const FamilySpec& spec);

Diagram build_preferred_diagram(const FamilySpec& spec);
RootRealization root_realization(const FamilySpec& spec);

// True iff Σ a_α α = 0 exactly, all labels positive, gcd of labels 1.
// Throws Error(DimensionMismatch) if the realization has a different node count.
bool verify_marks(const Diagram& d, const RootRealization& r);

// dim z(g_0) recorded for the family; |D_1| − 1 must equal it.
int center_dimension(const FamilySpec& spec);

// Expected Dynkin type of g_0^ss as a '+'-joined component list, e.g. "D5+C3".
// Low-rank coincidences are normalised (B1=C1=A1, C2=B2, D2=A1+A1, D3=A3).
std::string expected_g0ss_type(const FamilySpec& spec);

// Number of connected components of the subgraph on even nodes.
int odd_removed_components(const Diagram& d);

struct CatalogCheck {
  bool marks = false;
  bool structure = false;
  bool edges_match_form = false;
  bool longer_matches_form = false;
  bool parity_matches = false;
  bool colors_match = false;
  bool center_dimension = false;
  bool g0ss_shape = false;
  std::vector<std::string> problems;

  bool ok() const {
    return marks && structure && edges_match_form && longer_matches_form && parity_matches &&
           colors_match && center_dimension && g0ss_shape;
  }
};

// Validates a catalog diagram against its realization and recorded data.
CatalogCheck check_catalog_entry(const Diagram& d, const RootRealization& r);

// Every catalog instance with total rank ≤ max_rank (SL uses m + n ≤ max_sl),
// plus D(2,1;α), F(4), G(3).
std::vector<FamilySpec> catalog_instances(int max_rank = 8, int max_sl = 9);

}  // namespace vogan
