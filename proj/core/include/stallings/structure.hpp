#pragma once

// Signatures and finite first-order structures.
//
// Elements of a structure are opaque string ids; internally they are
// addressed by their position in the carrier (an Elem).  The carrier order
// is the declaration order and is what every "lexicographically least"
// choice in the library refers to.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stallings/error.hpp"

namespace stallings {

using Elem = std::uint32_t;
inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

enum class SymbolKind { none, constant, function, relation };

struct Signature {
  std::set<std::string> constants;
  std::map<std::string, int> functions;
  std::map<std::string, int> relations;

  SymbolKind kind(std::string_view name) const;
  int arity(std::string_view name) const;  // 0 for constants / unknown names

  // Violations of the signature invariants (shared names, arities < 1).
  std::vector<std::string> problems() const;

  // True if every symbol of `other` occurs here with the same arity.
  bool contains(const Signature& other) const;

  bool operator==(const Signature&) const = default;
};

// String-keyed description of a structure, exactly as it appears in a
// structure document.  May be invalid; see validate_structure.
struct StructureData {
  Signature signature;
  std::vector<std::string> carrier;
  std::map<std::string, std::string> constants;
  // function symbol -> argument tuple -> value
  std::map<std::string, std::map<std::vector<std::string>, std::string>> functions;
  std::map<std::string, std::vector<std::vector<std::string>>> relations;
};

struct Finding {
  enum class Kind {
    bad_signature,
    empty_carrier,
    duplicate_element,
    unknown_symbol,
    missing_constant,
    foreign_element,
    non_total_function,
    arity_mismatch,
  };
  Kind kind;
  std::string message;
};

std::string_view to_string(Finding::Kind kind);

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  std::size_t count(Finding::Kind kind) const;
};

ValidationReport validate_structure(const StructureData& data);

class StructureError : public Error {
 public:
  explicit StructureError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// Total n-ary operation on a carrier of size n_, stored row-major.
class FunctionTable {
 public:
  FunctionTable(std::string name, int arity, std::size_t carrier_size);

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }

  Elem operator()(std::span<const Elem> args) const { return values_[offset(args)]; }
  Elem operator()(Elem x) const { return values_[x]; }
  Elem operator()(Elem x, Elem y) const { return values_[x * n_ + y]; }

  std::size_t offset(std::span<const Elem> args) const;
  void set(std::span<const Elem> args, Elem value) { values_[offset(args)] = value; }

 private:
  std::string name_;
  int arity_;
  std::size_t n_;
  std::vector<Elem> values_;
};

class RelationTable {
 public:
  RelationTable(std::string name, int arity, std::size_t carrier_size);

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }

  bool contains(std::span<const Elem> tuple) const { return member_[offset(tuple)] != 0; }
  bool contains(Elem x) const { return member_[x] != 0; }
  bool contains(Elem x, Elem y) const { return member_[x * n_ + y] != 0; }
  bool contains(Elem x, Elem y, Elem z) const { return member_[(x * n_ + y) * n_ + z] != 0; }

  // Sorted, duplicate-free.
  const std::vector<std::vector<Elem>>& tuples() const { return tuples_; }

  void insert(std::span<const Elem> tuple);

 private:
  std::size_t offset(std::span<const Elem> tuple) const;

  std::string name_;
  int arity_;
  std::size_t n_;
  std::vector<std::uint8_t> member_;
  std::vector<std::vector<Elem>> tuples_;
};

// A validated finite L-structure.  Immutable after construction.
class FiniteStructure {
 public:
  // Throws StructureError carrying the full report when `data` is invalid.
  explicit FiniteStructure(const StructureData& data);

  const Signature& signature() const { return signature_; }
  std::size_t size() const { return carrier_.size(); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::string& id(Elem e) const { return carrier_.at(e); }

  std::optional<Elem> find(std::string_view id) const;
  Elem element(std::string_view id) const;  // throws Error for unknown ids

  Elem constant(std::string_view name) const;
  // Names of the constants interpreted by `e`, sorted.
  const std::vector<std::string>& constants_at(Elem e) const { return constants_at_[e]; }

  const FunctionTable& function(std::string_view name) const;
  const RelationTable& relation(std::string_view name) const;
  const std::vector<FunctionTable>& functions() const { return functions_; }
  const std::vector<RelationTable>& relations() const { return relations_; }

  StructureData data() const;

  // Restriction to a sub-signature (every symbol of `sub` must be present).
  FiniteStructure reduct(const Signature& sub) const;

  // Same structure with element ids renamed; ids missing from `renaming`
  // are kept.  Carrier order is preserved.
  FiniteStructure relabeled(const std::map<std::string, std::string>& renaming) const;

  std::vector<std::string> ids(std::span<const Elem> elems) const;
  std::vector<Elem> elements(std::span<const std::string> ids) const;

 private:
  Signature signature_;
  std::vector<std::string> carrier_;
  std::unordered_map<std::string, Elem> index_;
  std::map<std::string, Elem, std::less<>> constants_;
  std::vector<std::vector<std::string>> constants_at_;
  std::vector<FunctionTable> functions_;
  std::vector<RelationTable> relations_;
};

// Calls `visit(tuple)` for every tuple in elems^arity in lexicographic
// order of positions.  Returns false as soon as `visit` returns false.
template <typename Visit>
bool for_each_tuple(std::span<const Elem> elems, int arity, Visit&& visit) {
  std::vector<Elem> tuple(static_cast<std::size_t>(arity));
  if (elems.empty()) return true;
  std::vector<std::size_t> pos(static_cast<std::size_t>(arity), 0);
  for (std::size_t i = 0; i < tuple.size(); ++i) tuple[i] = elems[0];
  while (true) {
    if (!visit(std::span<const Elem>(tuple))) return false;
    std::size_t k = tuple.size();
    for (;;) {
      if (k == 0) return true;
      --k;
      if (++pos[k] < elems.size()) {
        tuple[k] = elems[pos[k]];
        break;
      }
      pos[k] = 0;
      tuple[k] = elems[0];
    }
  }
}

}  // namespace stallings
