#pragma once

// Finite groups, and pregroups whose universal groups are free products,
// amalgamated products and HNN extensions of them.  Each construction
// keeps enough raw data for an independent normal-form oracle.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stallings/pregroup.hpp"

namespace stallings {

class FiniteGroup {
 public:
  // table[i][j] is the index of elements[i] * elements[j].  Throws Error if
  // the table is not a group (identity, inverses, associativity, closure).
  FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table);

  // Z/n on ids names[0..n-1] (names[0] is the identity); default ids are
  // "1", "g", "g2", ..., "g<n-1>".
  static FiniteGroup cyclic(std::size_t n, std::vector<std::string> names = {});

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& id(std::size_t i) const { return elements_.at(i); }
  std::size_t index(std::string_view id) const;  // throws Error
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  // Subset that contains the identity and is closed under products.
  bool is_subgroup(const std::vector<std::size_t>& subset) const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inv_;
  std::size_t identity_ = 0;
};

// {"elements": [...], "table": [[id, ...], ...]} or {"cyclic": n, "names": [...]}.
FiniteGroup parse_group(std::string_view json_text);

// The group in the language (identity; mul/2, inv/1).  Each family entry
// (name, element indices) adds constants name_0, name_1, ...
FiniteStructure group_structure(const FiniteGroup& g, const std::string& identity_name = "1",
                                const std::vector<std::pair<std::string, std::vector<std::size_t>>>& family = {});

// D = G x G, M the multiplication graph.
Pregroup group_as_pregroup(const FiniteGroup& g);

enum class ConstructionKind { free, amalgam, hnn };
std::string_view to_string(ConstructionKind kind);
ConstructionKind parse_construction_kind(std::string_view text);

// How a carrier element arose.  Free products and amalgams use
// (factor, g); HNN extensions use t^-e0 g t^e1.
struct RawLetter {
  int factor = 0;
  std::size_t g = 0;
  int e0 = 0;
  int e1 = 0;
};

struct Construction {
  ConstructionKind kind = ConstructionKind::free;
  // free: {A, B}; amalgam: {A, B, C}; hnn: {G}
  std::vector<FiniteGroup> groups;
  // amalgam: C index -> A index / B index
  std::vector<std::size_t> c_in_a, c_in_b;
  // hnn: C1 and C2 as G indices, theta[i] = image of c1[i]
  std::vector<std::size_t> c1, c2, theta;
  std::string stable_letter = "t";
  // carrier element -> a raw representative, and all of its raw elements
  std::vector<RawLetter> letters;
  std::vector<std::vector<RawLetter>> classes;
  // raw name -> carrier id, for every raw element
  std::map<std::string, std::string> sidecar;
  std::shared_ptr<const SPregroup> result;

  const SPregroup& spregroup() const { return *result; }
  const Pregroup& pregroup() const { return result->pregroup(); }
};

// Identities are merged; the remaining ids must be disjoint.
Construction free_product_pregroup(const FiniteGroup& a, const FiniteGroup& b);

// C embedded in A and B by injective homomorphisms (C index -> factor
// index).  B-side ids of C elements are aliased to the A-side ids.  Throws
// Error when C is trivial (use the free product) or an embedding is bad.
Construction amalgam_pregroup(const FiniteGroup& a, const FiniteGroup& b, const FiniteGroup& c,
                              const std::vector<std::size_t>& c_in_a, const std::vector<std::size_t>& c_in_b);

struct HnnSpec {
  FiniteGroup g;
  std::vector<std::size_t> c1;     // subgroup of g
  std::vector<std::size_t> c2;     // subgroup of g
  std::vector<std::size_t> theta;  // theta[i] = image of c1[i], an element of c2
  std::string t = "t";
};

// Raw elements t^-e0 g t^e1 with t^-1 h t identified with theta(h) for h
// in C1.  Carrier ids: G ids, then <t>i_g, g_<t>, <t>i_g_<t> (with "<t>i",
// "<t>", "<t>i_<t>" for the identity).  Designated subsets C1 and C2.
Construction hnn_pregroup(const HnnSpec& spec);

// Builds a construction from a JSON spec:
//   {"kind":"free", "a":G, "b":G}
//   {"kind":"amalgam", "a":G, "b":G, "c":G, "c_in_a":{cid:aid}, "c_in_b":{cid:bid}}
//   {"kind":"hnn", "g":G, "c1":[ids], "c2":[ids], "theta":{id:id}, "t":"t"}
// where G is a group as accepted by parse_group.  "kind" may be omitted
// when `kind` is given; if both are present they must agree.
Construction construct_from_spec(std::string_view json_text, std::optional<ConstructionKind> kind = std::nullopt);

// Normal form computed from the raw group data only; two words get equal
// strings iff they are equal in the universal group.  The identity is "".
std::string oracle_normal_form(const Construction& c, const std::vector<Elem>& word);

}  // namespace stallings
