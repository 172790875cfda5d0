#include <algorithm>
#include <set>

#include "stallings/constructions.hpp"

namespace stallings {

FiniteGroup::FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table)
    : elements_(std::move(elements)), table_(std::move(table)) {
  const std::size_t n = elements_.size();
  if (n == 0) throw Error("group has no elements");
  std::set<std::string> ids;
  for (const auto& e : elements_) {
    if (e.empty() || e.find(',') != std::string::npos || e.find(';') != std::string::npos)
      throw Error("bad group element id '" + e + "'");
    if (!ids.insert(e).second) throw Error("group element '" + e + "' repeats");
  }
  if (table_.size() != n) throw Error("group table has the wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error("group table row has the wrong length");
    for (auto v : row)
      if (v >= n) throw Error("group table entry outside the group");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error("group table has no identity");
  inv_.assign(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (table_[x][y] == identity_ && table_[y][x] == identity_) inv_[x] = y;
  for (std::size_t x = 0; x < n; ++x)
    if (inv_[x] == n) throw Error("group element '" + elements_[x] + "' has no inverse");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (table_[table_[x][y]][z] != table_[x][table_[y][z]])
          throw Error("group table is not associative at (" + elements_[x] + "," + elements_[y] + "," +
                      elements_[z] + ")");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n, std::vector<std::string> names) {
  if (n == 0) throw Error("cyclic group of order 0");
  if (names.empty()) {
    names.push_back("1");
    if (n > 1) names.push_back("g");
    for (std::size_t i = 2; i < n; ++i) names.push_back("g" + std::to_string(i));
  }
  if (names.size() != n) throw Error("cyclic group: expected " + std::to_string(n) + " names");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup(std::move(names), std::move(table));
}

std::size_t FiniteGroup::index(std::string_view id) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == id) return i;
  throw Error("unknown group element '" + std::string(id) + "'");
}

bool FiniteGroup::is_subgroup(const std::vector<std::size_t>& subset) const {
  std::vector<char> in(size(), 0);
  for (auto x : subset) {
    if (x >= size()) return false;
    in[x] = 1;
  }
  if (!in[identity_]) return false;
  for (auto x : subset)
    for (auto y : subset)
      if (!in[mul(x, y)]) return false;
  return true;
}

FiniteStructure group_structure(const FiniteGroup& g, const std::string& identity_name,
                                const std::vector<std::pair<std::string, std::vector<std::size_t>>>& family) {
  StructureData d;
  d.signature.constants.insert(identity_name);
  d.signature.functions = {{"mul", 2}, {"inv", 1}};
  d.carrier = g.elements();
  d.constants[identity_name] = g.id(g.identity());
  for (const auto& [name, elems] : family) {
    for (std::size_t k = 0; k < elems.size(); ++k) {
      auto c = name + "_" + std::to_string(k);
      if (!d.signature.constants.insert(c).second) throw Error("duplicate constant '" + c + "'");
      d.constants[c] = g.id(elems[k]);
    }
  }
  auto& mul = d.functions["mul"];
  auto& inv = d.functions["inv"];
  for (std::size_t x = 0; x < g.size(); ++x) {
    inv[{g.id(x)}] = g.id(g.inv(x));
    for (std::size_t y = 0; y < g.size(); ++y) mul[{g.id(x), g.id(y)}] = g.id(g.mul(x, y));
  }
  return FiniteStructure(d);
}

Pregroup group_as_pregroup(const FiniteGroup& g) {
  StructureData d;
  d.signature = pregroup_signature();
  d.carrier = g.elements();
  d.constants["1"] = g.id(g.identity());
  auto& inv = d.functions["inv"];
  auto& D = d.relations["D"];
  auto& M = d.relations["M"];
  for (std::size_t x = 0; x < g.size(); ++x) {
    inv[{g.id(x)}] = g.id(g.inv(x));
    for (std::size_t y = 0; y < g.size(); ++y) {
      D.push_back({g.id(x), g.id(y)});
      M.push_back({g.id(x), g.id(y), g.id(g.mul(x, y))});
    }
  }
  return Pregroup(FiniteStructure(d));
}

}  // namespace stallings
