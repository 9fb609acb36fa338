#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vogan/rational.hpp"

namespace vogan {

enum class ErrorCode {
  InvalidParams,
  InvalidDiagram,
  InvalidCircling,
  UnknownVertex,
  NotPressable,
  NotAdmissible,
  CapExceeded,
  DimensionMismatch,
  ZeroNorm,
  Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Family { SL, B, C, D, D21A, F4, G3 };
enum class Parity { Even, Odd };
enum class Color { White, Grey, Black };

std::string_view to_string(Family f);
std::string_view to_string(Parity p);
std::string_view to_string(Color c);
std::optional<Family> family_from_string(std::string_view s);
std::optional<Parity> parity_from_string(std::string_view s);
std::optional<Color> color_from_string(std::string_view s);

// A contragredient family instance. `parity_rule` is the parity the label sum
// over circled simple roots must have for the circling to be admissible.
struct FamilySpec {
  Family family = Family::SL;
  int m = 0;
  int n = 0;
  Rational alpha{2};
  Parity parity_rule = Parity::Even;

  // Human-readable name, e.g. "D(5,3)", "D(2,1;2)", "F(4)".
  std::string name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Spec with the catalog's default parity rule for the family.
FamilySpec make_spec(Family family, int m = 0, int n = 0, Rational alpha = Rational{2});

using NodeId = int;

struct Node {
  NodeId id = 0;
  Parity parity = Parity::Even;
  Color color = Color::White;
  int a_label = 1;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  int multiplicity = 1;
  // Longer endpoint when multiplicity > 1, nullopt otherwise.
  std::optional<NodeId> longer;

  bool touches(NodeId x) const { return u == x || v == x; }
  NodeId other(NodeId x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Extended Dynkin diagram. Node ids are 1..size() and nodes[k].id == k + 1.
struct Diagram {
  FamilySpec family;
  std::vector<Node> nodes;
  std::vector<Edge> edges;  // sorted by (u, v) with u < v
  NodeId lowest = 0;
  bool verified = false;  // catalog-built and mark-checked

  int size() const { return static_cast<int>(nodes.size()); }
  bool has_node(NodeId id) const { return id >= 1 && id <= size(); }
  const Node& node(NodeId id) const;
  const Edge* edge_between(NodeId a, NodeId b) const;
  std::vector<NodeId> neighbors(NodeId id) const;
  std::vector<NodeId> even_nodes() const;
  std::vector<NodeId> dark_nodes() const;

  // Structure equality (ignores the verified flag).
  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.family == y.family && x.nodes == y.nodes && x.edges == y.edges &&
           x.lowest == y.lowest;
  }
};

// Maximum node count supported by the bitmask circling representation.
inline constexpr int kMaxNodes = 64;

// Checks the structural invariants that do not need a realization:
// consecutive ids, connectivity, colour/parity agreement, edge sanity,
// positive labels with gcd 1. Throws Error(InvalidDiagram).
void validate_structure(const Diagram& d);

}  // namespace vogan
