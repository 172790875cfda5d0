#pragma once

// Shared fixtures: Z/3, the infinite dihedral pregroup Z2*Z2, the amalgam
// Z4 *_{Z2} Z4 and the HNN extension of Z2 over itself, plus relabeled
// copies.  All are built once and live for the whole test run.

#include <map>
#include <string>
#include <vector>

#include "stallings/constructions.hpp"
#include "stallings/ugroup.hpp"

namespace fixtures {

using namespace stallings;

inline const FiniteGroup& z3() {
  static const FiniteGroup g = FiniteGroup::cyclic(3, {"0", "1", "2"});
  return g;
}

// Z/3 in the group language; the identity constant is named `identity`.
inline FiniteStructure z3_structure(const std::string& identity = "1") { return group_structure(z3(), identity); }

inline const Pregroup& z3_pregroup() {
  static const Pregroup p = group_as_pregroup(z3());
  return p;
}

inline FiniteGroup z4(const std::string& gen, const std::string& inv) {
  // order 1, c, gen, inv with gen^2 = c
  return FiniteGroup({"1", "c", gen, inv}, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}});
}

inline const Construction& dinf() {
  static const Construction c =
      free_product_pregroup(FiniteGroup::cyclic(2, {"1", "a"}), FiniteGroup::cyclic(2, {"1", "b"}));
  return c;
}

inline const Construction& am() {
  static const Construction c =
      amalgam_pregroup(z4("x", "X"), z4("y", "Y"), FiniteGroup::cyclic(2, {"1", "c"}), {0, 1}, {0, 1});
  return c;
}

inline const Construction& hnn_z2() {
  static const Construction c = hnn_pregroup({FiniteGroup::cyclic(2, {"1", "g"}), {0, 1}, {0, 1}, {0, 1}, "t"});
  return c;
}

inline const Pregroup& pg_dinf() { return dinf().pregroup(); }
// The plain pregroups, without the designated constants.
inline const Pregroup& pg_am() {
  static const Pregroup p(am().pregroup().structure().reduct(pregroup_signature()));
  return p;
}
inline const Pregroup& pg_hnn() {
  static const Pregroup p(hnn_z2().pregroup().structure().reduct(pregroup_signature()));
  return p;
}

inline SPregroup relabel(const SPregroup& p, const std::map<std::string, std::string>& renaming) {
  FiniteStructure m = p.structure().relabeled(renaming);
  if (p.family().empty()) return SPregroup(Pregroup(m));
  return SPregroup(m, p.family());
}

// PG_D-infinity with a and b swapped.
inline const SPregroup& dinf_swapped() {
  static const SPregroup p = relabel(dinf().spregroup(), {{"a", "b"}, {"b", "a"}});
  return p;
}

// PG_AM with the two factors exchanged (x <-> y, X <-> Y).
inline const SPregroup& am_swapped() {
  static const SPregroup p = relabel(am().spregroup(), {{"x", "y"}, {"X", "Y"}, {"y", "x"}, {"Y", "X"}});
  return p;
}

struct Named {
  std::string name;
  const Pregroup* p;
};

// The four pregroup fixtures.
inline std::vector<Named> all_pregroups() {
  return {{"Z/3", &z3_pregroup()}, {"PG_Dinf", &pg_dinf()}, {"PG_AM", &pg_am()}, {"HNN-Z2", &pg_hnn()}};
}

inline Word w(const Pregroup& p, std::string_view text) { return parse_word(p, text); }

}  // namespace fixtures
