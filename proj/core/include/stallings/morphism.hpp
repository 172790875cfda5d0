#pragma once

// L-morphisms between subsets of finite structures, isomorphism search,
// closure under the total operations, and bounded comparison of the
// finite-subset isomorphism classes of two structures.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stallings/structure.hpp"

namespace stallings {

// A map from a finite subset of one carrier into another carrier.
// domain is kept in carrier order; image[i] is the image of domain[i].
struct PartialMap {
  std::vector<Elem> domain;
  std::vector<Elem> image;

  std::optional<Elem> operator()(Elem x) const;
  bool injective() const;
  // Requires injective(); the result's domain is sorted.
  PartialMap inverse() const;

  static PartialMap identity(std::span<const Elem> subset);

  bool operator==(const PartialMap&) const = default;
};

struct MorphismViolation {
  enum class Condition { constant = 1, function = 2, relation = 3 };
  Condition condition;
  std::string symbol;
  std::vector<Elem> tuple;  // source-side witness
  std::string message;
};

struct MorphismCheck {
  std::vector<MorphismViolation> violations;  // condition 1, 2, 3 order

  bool ok() const { return violations.empty(); }
  const MorphismViolation* first() const { return violations.empty() ? nullptr : &violations.front(); }
};

// Checks the three morphism conditions.  Constant preservation is read
// through interpretations: if s interprets c in source then phi(s) must
// interpret c in target.  Throws Error when a domain or image element is
// outside the respective carrier.
MorphismCheck is_morphism(const PartialMap& phi, const FiniteStructure& source,
                          const FiniteStructure& target);

bool is_isomorphism(const PartialMap& phi, const FiniteStructure& source,
                    const FiniteStructure& target);

// Backtracking search for an isomorphism from `subset` onto some subset of
// target.  Returns the solution whose image tuple (listed in source carrier
// order) is lexicographically least in target carrier order.  Both
// structures must share a signature.
std::optional<PartialMap> find_isomorphism(std::span<const Elem> subset,
                                           const FiniteStructure& source,
                                           const FiniteStructure& target);

// As above, but images are restricted to `allowed` (a subset of target).
std::optional<PartialMap> find_isomorphism_into(std::span<const Elem> subset,
                                                const FiniteStructure& source,
                                                const FiniteStructure& target,
                                                std::span<const Elem> allowed);

struct ClosureChain {
  std::vector<std::vector<Elem>> steps;  // steps[i] = S_i, carrier order
  bool stabilized = false;               // some S_{i+1} == S_i within the chain
  std::size_t stable_from = 0;           // least i with S_i == S_{i+1}; valid if stabilized
};

// S_0 = seed; S_{i+1} = S_i plus every value of every function symbol on
// tuples from S_i.  Returns depth+1 sets.
ClosureChain generated_closure(std::span<const Elem> seed, const FiniteStructure& m,
                               std::size_t depth);

struct BoundedEquivalence {
  bool equivalent = true;
  enum class Direction { first_into_second, second_into_first };
  Direction direction = Direction::first_into_second;
  std::vector<Elem> witness;  // subset (of the direction's source) with no partner
  std::size_t subsets_checked = 0;
  std::size_t searches_run = 0;  // subsets not answered from the class cache
};

// Every subset of size <= max_size of either carrier is isomorphic to a
// subset of the other.  Subsets are visited size-first, then
// lexicographically; the first unmatched one is reported.
BoundedEquivalence bounded_f_equiv(const FiniteStructure& m, const FiniteStructure& n,
                                   std::size_t max_size);

// Subsets of {0..n-1} of the given size, lexicographic.
std::vector<std::vector<Elem>> subsets_of_size(std::size_t n, std::size_t size);

}  // namespace stallings
