#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vogan/catalog.hpp"
#include "vogan/types.hpp"

namespace vogan {

// Set of circled even vertices, stored as a bitmask (bit id-1).
class Circling {
 public:
  Circling() = default;
  explicit Circling(std::uint64_t bits) : bits_(bits) {}
  static Circling from_ids(const std::vector<NodeId>& ids);

  bool contains(NodeId id) const { return id >= 1 && id <= kMaxNodes && ((bits_ >> (id - 1)) & 1U); }
  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  std::vector<NodeId> ids() const;

  friend bool operator==(Circling, Circling) = default;

 private:
  std::uint64_t bits_ = 0;
};

// (size, lexicographic sorted id list) order used for representatives.
bool circling_less(Circling a, Circling b);

struct PressSequence {
  std::vector<NodeId> steps;
  friend bool operator==(const PressSequence&, const PressSequence&) = default;
};

struct Symmetry {
  std::vector<NodeId> perm;  // perm[id - 1] is the image of id
  bool fixes_lowest = true;

  NodeId operator()(NodeId id) const { return perm.at(id - 1); }
  Circling apply(Circling c) const;
  bool is_identity() const;
  friend bool operator==(const Symmetry& a, const Symmetry& b) { return a.perm == b.perm; }
};

Symmetry identity_symmetry(const Diagram& d);

struct OrbitStep {
  Circling predecessor;
  NodeId pressed = 0;  // 0 for the seed
};

struct OrbitReport {
  Circling seed;
  std::vector<Circling> orbit;  // BFS discovery order, seed first
  std::map<std::uint64_t, OrbitStep> generator_log;
  int min_size = 0;

  bool contains(Circling c) const { return generator_log.count(c.bits()) != 0; }
  // Presses leading from the seed to `target` (throws if not in the orbit).
  PressSequence path_to(Circling target) const;
};

struct EquivalenceClass {
  std::vector<Circling> members;  // admissible circlings, sorted
  Circling representative;
  std::map<std::uint64_t, std::pair<Symmetry, PressSequence>> witness;
  bool parity_mixed = false;
};

struct EngineOptions {
  // Maximum number of circlings enumerated by classify or held in one orbit.
  std::uint64_t cap = std::uint64_t{1} << 22;

  // Default cap, overridden by VOGAN_ORBIT_CAP when set.
  static EngineOptions from_environment();
};

// Throws Error(InvalidCircling) if c names a missing or odd vertex.
void validate_circling(const Diagram& d, Circling c);
Circling make_circling(const Diagram& d, const std::vector<NodeId>& ids);

// Parity of Σ a_α over circled simple roots (φ excluded) against the rule.
bool is_admissible(const Diagram& d, Circling c);

// Vertices that may be pressed in c (circled, even), ascending.
std::vector<NodeId> pressable(const Diagram& d, Circling c);

// Neighbours whose circling flips when i is pressed.
std::uint64_t toggle_mask(const Diagram& d, NodeId i);

Circling press(const Diagram& d, Circling c, NodeId i);
Circling replay(const Diagram& d, Circling c, const PressSequence& seq);

OrbitReport f_orbit(const Diagram& d, Circling c, const EngineOptions& opts = {});
std::optional<PressSequence> f_related(const Diagram& d, Circling c1, Circling c2,
                                       const EngineOptions& opts = {});

struct Reduction {
  Circling circling;
  PressSequence steps;
};
Reduction reduce(const Diagram& d, Circling c, const EngineOptions& opts = {});

// Identity first, then lexicographic by permutation.
std::vector<Symmetry> automorphisms(const Diagram& d);

struct Equivalence {
  bool equivalent = false;
  std::optional<Symmetry> symmetry;
  std::optional<PressSequence> steps;  // presses taking symmetry(c1) to c2
};
Equivalence equivalent(const Diagram& d, Circling c1, Circling c2, const EngineOptions& opts = {});

std::vector<EquivalenceClass> classify(const Diagram& d, const EngineOptions& opts = {});

struct NeighborReflection {
  NodeId neighbor = 0;
  Parity parity = Parity::Even;
  Rational n{0};                  // n_{βα} = 2B(β,α)/B(α,α)
  bool n_in_range = false;        // n ∈ {−1, −2, −3}
  bool parity_preserved = false;  // parity(β − nα) == parity(β)
  bool reflection_toggles = false;  // even β with odd n
  bool press_toggles = false;
  bool agrees = false;
};

struct ReflectionReport {
  NodeId vertex = 0;
  Rational norm{0};  // B(α, α)
  std::vector<NeighborReflection> neighbors;

  bool all_agree() const;
};

ReflectionReport reflection_report(const Diagram& d, const RootRealization& r, Circling c,
                                   NodeId i);

}  // namespace vogan
