#pragma once

// Systems of equations over a finite structure: solution sets
// (varieties), smallest equivalent subsystems, and the universal sentence
// that carries a consequence of such a subsystem.

#include <cstddef>
#include <string>
#include <vector>

#include "stallings/formula.hpp"

namespace stallings {

class EquationSystem {
 public:
  EquationSystem() = default;
  // Every entry must be an equation (term = term) whose variables are
  // among `variables`; throws Error otherwise.
  EquationSystem(std::vector<std::string> variables, std::vector<Formula> equations);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Formula>& equations() const { return equations_; }
  std::size_t size() const { return equations_.size(); }

  EquationSystem subsystem(const std::vector<std::size_t>& indices) const;

 private:
  std::vector<std::string> variables_;
  std::vector<Formula> equations_;
};

// Parses each text with the formula grammar restricted to "term = term".
// Variables default to the order of first appearance.
EquationSystem parse_equation_system(const std::vector<std::string>& texts, const Signature& sig,
                                     std::vector<std::string> variables = {});

using Tuple = std::vector<Elem>;

// All tuples (in variable order, lexicographic) satisfying every equation.
std::vector<Tuple> variety(const FiniteStructure& m, const EquationSystem& sys);

inline constexpr std::size_t kMaxCoreEquations = 12;

// Smallest subsystem with the same variety; among equally small ones the
// first in index-lexicographic order.  Throws Error above
// kMaxCoreEquations equations.
EquationSystem noetherian_core(const FiniteStructure& m, const EquationSystem& sys);

// forall x1..xm !(s1 & ... & sr & !s), or forall x1..xm s when the core is
// empty.  Throws Error if s mentions variables outside the core's list.
Formula transfer_sentence(const EquationSystem& core, const Formula& s);

}  // namespace stallings
