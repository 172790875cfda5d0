#pragma once

// Pregroups as structures over the language (1; inv; D, M), the eight
// pregroup axioms, S-pregroups with designated constants and the
// membership predicate "delta".

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stallings/formula.hpp"
#include "stallings/io.hpp"
#include "stallings/structure.hpp"

namespace stallings {

// C = {1}, F = {inv/1}, R = {D/2, M/3}.
const Signature& pregroup_signature();

struct AxiomResult {
  int number = 0;  // 1..8
  bool holds = true;
  std::vector<Elem> witness;  // failing tuple, in the axiom's variable order
  std::string detail;
};

struct AxiomReport {
  std::array<AxiomResult, 8> axioms;

  bool ok() const;
  std::array<bool, 8> verdicts() const;
};

// Brute-force evaluation of axioms (i)-(viii) on a candidate.  The
// candidate's signature must contain pregroup_signature().
AxiomReport check_axioms(const FiniteStructure& candidate);

// The eight axioms as sentences in the formula grammar.
const std::array<std::string, 8>& axiom_texts();

// Independent route: parse axiom_texts() and evaluate them with eval().
std::array<bool, 8> evaluate_axiom_sentences(const FiniteStructure& candidate);

class PregroupError : public Error {
 public:
  explicit PregroupError(AxiomReport report);
  const AxiomReport& report() const noexcept { return report_; }

 private:
  AxiomReport report_;
};

class Pregroup {
 public:
  // Throws PregroupError if any axiom fails, Error on a wrong signature.
  explicit Pregroup(FiniteStructure structure);

  const FiniteStructure& structure() const { return structure_; }
  std::size_t size() const { return structure_.size(); }
  const std::string& id(Elem e) const { return structure_.id(e); }
  Elem element(std::string_view id) const { return structure_.element(id); }

  Elem identity() const { return identity_; }
  Elem inv(Elem x) const { return inv_[x]; }
  bool in_domain(Elem x, Elem y) const { return prod_[x * size() + y] != kNoElem; }
  // The product xy, or kNoElem when (x, y) is not in D.
  Elem mul(Elem x, Elem y) const { return prod_[x * size() + y]; }
  std::optional<Elem> product(Elem x, Elem y) const;

 private:
  FiniteStructure structure_;
  Elem identity_;
  std::vector<Elem> inv_;
  std::vector<Elem> prod_;
};

struct AbcViolation {
  std::array<Elem, 3> triple;  // (a, b, c) in M
  std::string missing;         // the derived tuple that is absent
};

// For every (a,b,c) in M checks (c, b^-1, a) and (c^-1, a, b^-1) in M.
std::vector<AbcViolation> lemma_abc_check(const Pregroup& p);

struct SubpregroupCheck {
  bool ok = false;
  std::string reason;
};

// q is a pregroup on a subset of p's carrier (matched by id) with the
// same identity and with D, M and inv the restrictions of p's.
SubpregroupCheck is_subpregroup(const FiniteStructure& q, const Pregroup& p);

// The substructure of p on `subset` with inherited tables; throws Error if
// subset is not closed under inversion or misses the identity.
FiniteStructure induced_substructure(const Pregroup& p, std::span<const Elem> subset);

struct DesignatedSubset {
  std::string name;
  std::vector<Elem> elements;  // elements[k] is named name + "_" + k

  std::string constant_name(std::size_t k) const { return name + "_" + std::to_string(k); }
};

// A pregroup with designated constants for a family of subsets and the
// unary predicate delta marking their union.  With an empty family this
// is a plain pregroup (no delta).
class SPregroup {
 public:
  explicit SPregroup(Pregroup plain);
  // `structure` already carries the constants and delta; they are checked
  // against `family`.
  SPregroup(FiniteStructure structure, std::vector<DesignatedSubset> family);

  const Pregroup& pregroup() const { return pregroup_; }
  const FiniteStructure& structure() const { return pregroup_.structure(); }
  const std::vector<DesignatedSubset>& family() const { return family_; }
  std::vector<Elem> delta() const;
  // Closed literals over the designated constants (terms of level <= 1).
  const std::vector<Formula>& diagram() const { return diagram_; }

 private:
  void validate();

  Pregroup pregroup_;
  std::vector<DesignatedSubset> family_;
  std::vector<Formula> diagram_;
};

// Adds constants name_k for every listed subset, sets delta to their union
// and validates axioms (ix), (x) and each subset's diagram.  Throws Error
// when a subset misses the identity, a name repeats, or delta exists.
SPregroup attach_constants(const Pregroup& p,
                           const std::vector<std::pair<std::string, std::vector<Elem>>>& family);

// Documents of kind "pregroup" become plain S-pregroups; kind
// "spregroup" documents carry their constants, delta and "designated"
// lists.  Throws PregroupError or Error on invalid input.
SPregroup spregroup_from_document(const StructureDocument& doc);
StructureDocument to_document(const SPregroup& p);

}  // namespace stallings
