#include "stallings/structure.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace stallings {

SymbolKind Signature::kind(std::string_view name) const {
  std::string key(name);
  if (constants.count(key)) return SymbolKind::constant;
  if (functions.count(key)) return SymbolKind::function;
  if (relations.count(key)) return SymbolKind::relation;
  return SymbolKind::none;
}

int Signature::arity(std::string_view name) const {
  std::string key(name);
  if (auto it = functions.find(key); it != functions.end()) return it->second;
  if (auto it = relations.find(key); it != relations.end()) return it->second;
  return 0;
}

std::vector<std::string> Signature::problems() const {
  std::vector<std::string> out;
  for (const auto& [name, arity] : functions) {
    if (constants.count(name)) out.push_back("symbol '" + name + "' is both a constant and a function");
    if (relations.count(name)) out.push_back("symbol '" + name + "' is both a function and a relation");
    if (arity < 1) out.push_back("function '" + name + "' has arity " + std::to_string(arity));
  }
  for (const auto& [name, arity] : relations) {
    if (constants.count(name)) out.push_back("symbol '" + name + "' is both a constant and a relation");
    if (arity < 1) out.push_back("relation '" + name + "' has arity " + std::to_string(arity));
  }
  return out;
}

bool Signature::contains(const Signature& other) const {
  for (const auto& c : other.constants)
    if (!constants.count(c)) return false;
  for (const auto& [f, n] : other.functions) {
    auto it = functions.find(f);
    if (it == functions.end() || it->second != n) return false;
  }
  for (const auto& [r, n] : other.relations) {
    auto it = relations.find(r);
    if (it == relations.end() || it->second != n) return false;
  }
  return true;
}

std::string_view to_string(Finding::Kind kind) {
  switch (kind) {
    case Finding::Kind::bad_signature: return "bad signature";
    case Finding::Kind::empty_carrier: return "empty carrier";
    case Finding::Kind::duplicate_element: return "duplicate element";
    case Finding::Kind::unknown_symbol: return "unknown symbol";
    case Finding::Kind::missing_constant: return "missing constant";
    case Finding::Kind::foreign_element: return "foreign element";
    case Finding::Kind::non_total_function: return "non-total function";
    case Finding::Kind::arity_mismatch: return "arity mismatch";
  }
  return "?";
}

std::size_t ValidationReport::count(Finding::Kind kind) const {
  return static_cast<std::size_t>(std::count_if(
      findings.begin(), findings.end(), [kind](const Finding& f) { return f.kind == kind; }));
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

std::string summarize(const ValidationReport& report) {
  std::ostringstream os;
  os << "invalid structure:";
  for (const auto& f : report.findings) os << "\n  " << to_string(f.kind) << ": " << f.message;
  return os.str();
}

}  // namespace

ValidationReport validate_structure(const StructureData& data) {
  ValidationReport report;
  auto add = [&](Finding::Kind kind, std::string msg) {
    report.findings.push_back({kind, std::move(msg)});
  };
  for (auto& p : data.signature.problems()) add(Finding::Kind::bad_signature, p);

  if (data.carrier.empty()) add(Finding::Kind::empty_carrier, "carrier has no elements");
  std::set<std::string> carrier;
  for (const auto& id : data.carrier) {
    if (!carrier.insert(id).second) add(Finding::Kind::duplicate_element, "element '" + id + "' listed twice");
  }
  auto in_carrier = [&](const std::string& id) { return carrier.count(id) > 0; };

  for (const auto& c : data.signature.constants) {
    auto it = data.constants.find(c);
    if (it == data.constants.end())
      add(Finding::Kind::missing_constant, "constant '" + c + "' has no interpretation");
    else if (!in_carrier(it->second))
      add(Finding::Kind::foreign_element, "constant '" + c + "' interpreted as unknown element '" + it->second + "'");
  }
  for (const auto& [c, v] : data.constants) {
    if (!data.signature.constants.count(c))
      add(Finding::Kind::unknown_symbol, "interpretation given for undeclared constant '" + c + "'");
  }

  for (const auto& [f, table] : data.functions) {
    if (!data.signature.functions.count(f))
      add(Finding::Kind::unknown_symbol, "table given for undeclared function '" + f + "'");
  }
  for (const auto& [f, arity] : data.signature.functions) {
    auto it = data.functions.find(f);
    static const std::map<std::vector<std::string>, std::string> kEmpty;
    const auto& table = it == data.functions.end() ? kEmpty : it->second;
    for (const auto& [args, value] : table) {
      if (static_cast<int>(args.size()) != arity) {
        add(Finding::Kind::arity_mismatch, "function '" + f + "' entry (" + join(args) + ") has " +
                                               std::to_string(args.size()) + " arguments, expected " +
                                               std::to_string(arity));
        continue;
      }
      for (const auto& a : args)
        if (!in_carrier(a)) add(Finding::Kind::foreign_element, "function '" + f + "' argument '" + a + "' not in carrier");
      if (!in_carrier(value))
        add(Finding::Kind::foreign_element, "function '" + f + "' value '" + value + "' not in carrier");
    }
    if (arity < 1 || data.carrier.empty()) continue;
    // Totality: every tuple over the carrier needs an entry.
    std::size_t missing = 0;
    std::vector<std::string> first_missing;
    std::vector<std::string> uniq(carrier.begin(), carrier.end());
    std::vector<std::size_t> pos(static_cast<std::size_t>(arity), 0);
    std::vector<std::string> args(static_cast<std::size_t>(arity), uniq.front());
    while (true) {
      if (!table.count(args)) {
        if (missing == 0) first_missing = args;
        ++missing;
      }
      std::size_t k = args.size();
      bool done = true;
      while (k > 0) {
        --k;
        if (++pos[k] < uniq.size()) {
          args[k] = uniq[pos[k]];
          done = false;
          break;
        }
        pos[k] = 0;
        args[k] = uniq.front();
      }
      if (done) break;
    }
    if (missing > 0) {
      add(Finding::Kind::non_total_function, "function '" + f + "' undefined on " + std::to_string(missing) +
                                                 " tuple(s), first (" + join(first_missing) + ")");
    }
  }

  for (const auto& [r, tuples] : data.relations) {
    auto it = data.signature.relations.find(r);
    if (it == data.signature.relations.end()) {
      add(Finding::Kind::unknown_symbol, "tuples given for undeclared relation '" + r + "'");
      continue;
    }
    for (const auto& t : tuples) {
      if (static_cast<int>(t.size()) != it->second) {
        add(Finding::Kind::arity_mismatch, "relation '" + r + "' tuple (" + join(t) + ") has wrong length");
        continue;
      }
      for (const auto& a : t)
        if (!in_carrier(a))
          add(Finding::Kind::foreign_element, "relation '" + r + "' tuple (" + join(t) + ") uses unknown element '" + a + "'");
    }
  }
  return report;
}

StructureError::StructureError(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

FunctionTable::FunctionTable(std::string name, int arity, std::size_t carrier_size)
    : name_(std::move(name)), arity_(arity), n_(carrier_size) {
  std::size_t cells = 1;
  for (int i = 0; i < arity; ++i) cells *= n_;
  values_.assign(cells, kNoElem);
}

std::size_t FunctionTable::offset(std::span<const Elem> args) const {
  std::size_t off = 0;
  for (Elem a : args) off = off * n_ + a;
  return off;
}

RelationTable::RelationTable(std::string name, int arity, std::size_t carrier_size)
    : name_(std::move(name)), arity_(arity), n_(carrier_size) {
  std::size_t cells = 1;
  for (int i = 0; i < arity; ++i) cells *= n_;
  member_.assign(cells, 0);
}

std::size_t RelationTable::offset(std::span<const Elem> tuple) const {
  std::size_t off = 0;
  for (Elem a : tuple) off = off * n_ + a;
  return off;
}

void RelationTable::insert(std::span<const Elem> tuple) {
  auto& cell = member_[offset(tuple)];
  if (cell) return;
  cell = 1;
  std::vector<Elem> t(tuple.begin(), tuple.end());
  tuples_.insert(std::lower_bound(tuples_.begin(), tuples_.end(), t), std::move(t));
}

FiniteStructure::FiniteStructure(const StructureData& data) {
  if (auto report = validate_structure(data); !report.ok()) throw StructureError(std::move(report));
  signature_ = data.signature;
  carrier_ = data.carrier;
  for (Elem i = 0; i < carrier_.size(); ++i) index_.emplace(carrier_[i], i);
  constants_at_.resize(carrier_.size());
  for (const auto& c : signature_.constants) {
    Elem e = index_.at(data.constants.at(c));
    constants_.emplace(c, e);
    constants_at_[e].push_back(c);  // signature constants iterate sorted
  }
  for (const auto& [f, arity] : signature_.functions) {
    FunctionTable table(f, arity, carrier_.size());
    for (const auto& [args, value] : data.functions.at(f)) {
      std::vector<Elem> idx;
      for (const auto& a : args) idx.push_back(index_.at(a));
      table.set(idx, index_.at(value));
    }
    functions_.push_back(std::move(table));
  }
  for (const auto& [r, arity] : signature_.relations) {
    RelationTable table(r, arity, carrier_.size());
    if (auto it = data.relations.find(r); it != data.relations.end()) {
      for (const auto& t : it->second) {
        std::vector<Elem> idx;
        for (const auto& a : t) idx.push_back(index_.at(a));
        table.insert(idx);
      }
    }
    relations_.push_back(std::move(table));
  }
}

std::optional<Elem> FiniteStructure::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem FiniteStructure::element(std::string_view id) const {
  if (auto e = find(id)) return *e;
  throw Error("unknown element '" + std::string(id) + "'");
}

Elem FiniteStructure::constant(std::string_view name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) throw Error("unknown constant '" + std::string(name) + "'");
  return it->second;
}

const FunctionTable& FiniteStructure::function(std::string_view name) const {
  for (const auto& f : functions_)
    if (f.name() == name) return f;
  throw Error("unknown function symbol '" + std::string(name) + "'");
}

const RelationTable& FiniteStructure::relation(std::string_view name) const {
  for (const auto& r : relations_)
    if (r.name() == name) return r;
  throw Error("unknown relation symbol '" + std::string(name) + "'");
}

StructureData FiniteStructure::data() const {
  StructureData d;
  d.signature = signature_;
  d.carrier = carrier_;
  for (const auto& [c, e] : constants_) d.constants.emplace(c, carrier_[e]);
  std::vector<Elem> all(carrier_.size());
  for (Elem i = 0; i < all.size(); ++i) all[i] = i;
  for (const auto& f : functions_) {
    auto& table = d.functions[f.name()];
    for_each_tuple(all, f.arity(), [&](std::span<const Elem> args) {
      table.emplace(ids(args), carrier_[f(args)]);
      return true;
    });
  }
  for (const auto& r : relations_) {
    auto& tuples = d.relations[r.name()];
    for (const auto& t : r.tuples()) tuples.push_back(ids(t));
  }
  return d;
}

FiniteStructure FiniteStructure::reduct(const Signature& sub) const {
  if (!signature_.contains(sub)) throw Error("reduct: signature is not a sub-signature");
  StructureData full = data();
  StructureData d;
  d.signature = sub;
  d.carrier = full.carrier;
  for (const auto& c : sub.constants) d.constants.emplace(c, full.constants.at(c));
  for (const auto& [f, n] : sub.functions) d.functions.emplace(f, std::move(full.functions.at(f)));
  for (const auto& [r, n] : sub.relations) d.relations.emplace(r, std::move(full.relations.at(r)));
  return FiniteStructure(d);
}

FiniteStructure FiniteStructure::relabeled(const std::map<std::string, std::string>& renaming) const {
  auto rename = [&](const std::string& id) {
    auto it = renaming.find(id);
    return it == renaming.end() ? id : it->second;
  };
  StructureData d = data();
  StructureData out;
  out.signature = d.signature;
  for (const auto& id : d.carrier) out.carrier.push_back(rename(id));
  for (const auto& [c, v] : d.constants) out.constants.emplace(c, rename(v));
  for (const auto& [f, table] : d.functions) {
    auto& t = out.functions[f];
    for (const auto& [args, v] : table) {
      std::vector<std::string> a;
      for (const auto& x : args) a.push_back(rename(x));
      t.emplace(std::move(a), rename(v));
    }
  }
  for (const auto& [r, tuples] : d.relations) {
    auto& ts = out.relations[r];
    for (const auto& tup : tuples) {
      std::vector<std::string> a;
      for (const auto& x : tup) a.push_back(rename(x));
      ts.push_back(std::move(a));
    }
  }
  return FiniteStructure(out);
}

std::vector<std::string> FiniteStructure::ids(std::span<const Elem> elems) const {
  std::vector<std::string> out;
  out.reserve(elems.size());
  for (Elem e : elems) out.push_back(carrier_.at(e));
  return out;
}

std::vector<Elem> FiniteStructure::elements(std::span<const std::string> ids) const {
  std::vector<Elem> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(element(id));
  return out;
}

}  // namespace stallings
