#include "stallings/pregroup.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace stallings {

const Signature& pregroup_signature() {
  static const Signature sig{{"1"}, {{"inv", 1}}, {{"D", 2}, {"M", 3}}};
  return sig;
}

bool AxiomReport::ok() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.holds; });
}

std::array<bool, 8> AxiomReport::verdicts() const {
  std::array<bool, 8> out{};
  for (std::size_t i = 0; i < 8; ++i) out[i] = axioms[i].holds;
  return out;
}

namespace {

std::string tuple_text(const FiniteStructure& m, std::initializer_list<Elem> t) {
  std::string out = "(";
  bool first = true;
  for (Elem e : t) {
    if (!first) out += ',';
    first = false;
    out += m.id(e);
  }
  return out + ")";
}

void require_pregroup_signature(const FiniteStructure& m) {
  if (!m.signature().contains(pregroup_signature()))
    throw Error("structure is not in the pregroup language (needs constant 1, inv/1, D/2, M/3)");
}

}  // namespace

AxiomReport check_axioms(const FiniteStructure& p) {
  require_pregroup_signature(p);
  const auto n = static_cast<Elem>(p.size());
  const auto& D = p.relation("D");
  const auto& M = p.relation("M");
  const auto& inv = p.function("inv");
  const Elem one = p.constant("1");

  AxiomReport report;
  for (int i = 0; i < 8; ++i) report.axioms[static_cast<std::size_t>(i)].number = i + 1;
  auto fail = [&](int axiom, std::vector<Elem> witness, std::string detail) {
    auto& a = report.axioms[static_cast<std::size_t>(axiom - 1)];
    if (!a.holds) return;
    a.holds = false;
    a.witness = std::move(witness);
    a.detail = std::move(detail);
  };

  // M indexed by its first two coordinates.
  std::vector<std::vector<Elem>> results(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<std::pair<Elem, Elem>>> by_first(n);  // b -> (c, s) with (b,c,s) in M
  for (const auto& t : M.tuples()) {
    results[t[0] * n + t[1]].push_back(t[2]);
    by_first[t[0]].emplace_back(t[1], t[2]);
  }
  auto defined = [&](Elem x, Elem y) { return !results[x * n + y].empty(); };

  // (i)
  for (const auto& t : M.tuples()) {
    if (!D.contains(t[0], t[1])) {
      fail(1, t, tuple_text(p, {t[0], t[1], t[2]}) + " in M but " + tuple_text(p, {t[0], t[1]}) + " not in D");
      break;
    }
  }
  // (ii)
  for (const auto& t : D.tuples()) {
    if (!defined(t[0], t[1])) {
      fail(2, t, tuple_text(p, {t[0], t[1]}) + " in D but no (x,y,z) in M");
      break;
    }
  }
  // (iii)
  for (Elem w = 0; w < n && report.axioms[2].holds; ++w)
    for (Elem x = 0; x < n; ++x) {
      const auto& r = results[w * n + x];
      if (r.size() > 1) {
        fail(3, {w, x, r[0], r[1]}, tuple_text(p, {w, x}) + " has two products " + p.id(r[0]) + ", " + p.id(r[1]));
        break;
      }
    }
  // (iv), (v)
  for (Elem x = 0; x < n; ++x) {
    if (!M.contains(x, one, x) || !M.contains(one, x, x))
      fail(4, {x}, "identity law fails at " + p.id(x));
    if (!M.contains(x, inv(x), one) || !M.contains(inv(x), x, one))
      fail(5, {x}, "inverse law fails at " + p.id(x));
  }
  // (vi)
  for (const auto& t : M.tuples()) {
    if (!M.contains(inv(t[1]), inv(t[0]), inv(t[2]))) {
      fail(6, t, tuple_text(p, {t[0], t[1], t[2]}) + " in M but " +
                     tuple_text(p, {inv(t[1]), inv(t[0]), inv(t[2])}) + " is not");
      break;
    }
  }
  // (vii)  (a,b,r), (b,c,s) in M  =>  ((a,s,x) in M <-> (r,c,x) in M)
  for (const auto& t : M.tuples()) {
    if (!report.axioms[6].holds) break;
    Elem a = t[0], b = t[1], r = t[2];
    for (auto [c, s] : by_first[b]) {
      bool done = false;
      for (Elem x = 0; x < n; ++x) {
        if (M.contains(a, s, x) != M.contains(r, c, x)) {
          fail(7, {a, b, c, r, s, x},
               "a,b,c,r,s,x = " + tuple_text(p, {a, b, c, r, s, x}) + ": (a,s,x) in M differs from (r,c,x) in M");
          done = true;
          break;
        }
      }
      if (done) break;
    }
  }
  // (viii)  (a,b,x), (b,c,y), (c,d,z) in M  =>  (a,y) or (y,d) has a product
  for (const auto& t : M.tuples()) {
    if (!report.axioms[7].holds) break;
    Elem a = t[0], b = t[1], x = t[2];
    for (auto [c, y] : by_first[b]) {
      bool done = false;
      for (auto [d, z] : by_first[c]) {
        if (!defined(a, y) && !defined(y, d)) {
          fail(8, {a, b, c, d, x, y, z},
               "a,b,c,d = " + tuple_text(p, {a, b, c, d}) + ": neither (a,bc) nor (bc,d) has a product");
          done = true;
          break;
        }
      }
      if (done) break;
    }
  }
  return report;
}

const std::array<std::string, 8>& axiom_texts() {
  static const std::array<std::string, 8> texts{
      "forall x . forall y . forall z . (!M(x,y,z) | D(x,y))",
      "forall x . forall y . (!D(x,y) | exists z . M(x,y,z))",
      "forall w . forall x . forall y . forall z . (!(M(w,x,y) & M(w,x,z)) | y = z)",
      "forall x . (M(x,1,x) & M(1,x,x))",
      "forall x . (M(x,inv(x),1) & M(inv(x),x,1))",
      "forall x . forall y . forall z . (!M(x,y,z) | M(inv(y),inv(x),inv(z)))",
      "forall a . forall b . forall c . forall r . forall s . forall x . "
      "(!(M(a,b,r) & M(b,c,s)) | ((!M(a,s,x) | M(r,c,x)) & (!M(r,c,x) | M(a,s,x))))",
      "forall a . forall b . forall c . forall d . forall x . forall y . forall z . "
      "(!(M(a,b,x) & M(b,c,y) & M(c,d,z)) | exists r . exists s . (M(a,y,r) | M(y,d,s)))",
  };
  return texts;
}

std::array<bool, 8> evaluate_axiom_sentences(const FiniteStructure& candidate) {
  require_pregroup_signature(candidate);
  std::array<bool, 8> out{};
  for (std::size_t i = 0; i < 8; ++i) out[i] = eval(candidate, parse_formula(axiom_texts()[i], candidate.signature()));
  return out;
}

namespace {

std::string report_text(const AxiomReport& r) {
  std::ostringstream os;
  os << "not a pregroup:";
  for (const auto& a : r.axioms)
    if (!a.holds) os << "\n  axiom " << a.number << ": " << a.detail;
  return os.str();
}

}  // namespace

PregroupError::PregroupError(AxiomReport report) : Error(report_text(report)), report_(std::move(report)) {}

Pregroup::Pregroup(FiniteStructure structure) : structure_(std::move(structure)) {
  auto report = check_axioms(structure_);
  if (!report.ok()) throw PregroupError(std::move(report));
  const auto n = size();
  identity_ = structure_.constant("1");
  const auto& inv = structure_.function("inv");
  inv_.resize(n);
  for (Elem x = 0; x < n; ++x) inv_[x] = inv(x);
  prod_.assign(n * n, kNoElem);
  for (const auto& t : structure_.relation("M").tuples()) prod_[t[0] * n + t[1]] = t[2];
}

std::optional<Elem> Pregroup::product(Elem x, Elem y) const {
  Elem z = mul(x, y);
  if (z == kNoElem) return std::nullopt;
  return z;
}

std::vector<AbcViolation> lemma_abc_check(const Pregroup& p) {
  std::vector<AbcViolation> out;
  const auto& M = p.structure().relation("M");
  for (const auto& t : M.tuples()) {
    Elem a = t[0], b = t[1], c = t[2];
    if (!M.contains(c, p.inv(b), a))
      out.push_back({{a, b, c}, tuple_text(p.structure(), {c, p.inv(b), a})});
    if (!M.contains(p.inv(c), a, p.inv(b)))
      out.push_back({{a, b, c}, tuple_text(p.structure(), {p.inv(c), a, p.inv(b)})});
  }
  return out;
}

SubpregroupCheck is_subpregroup(const FiniteStructure& q, const Pregroup& p) {
  require_pregroup_signature(q);
  const auto& ps = p.structure();
  std::vector<Elem> into(q.size());
  for (Elem x = 0; x < q.size(); ++x) {
    auto e = ps.find(q.id(x));
    if (!e) return {false, "element '" + q.id(x) + "' is not in the ambient pregroup"};
    into[x] = *e;
  }
  if (into[q.constant("1")] != p.identity()) return {false, "identities differ"};
  const auto& qinv = q.function("inv");
  for (Elem x = 0; x < q.size(); ++x)
    if (into[qinv(x)] != p.inv(into[x])) return {false, "inversion of '" + q.id(x) + "' is not inherited"};
  const auto& qD = q.relation("D");
  const auto& qM = q.relation("M");
  for (Elem x = 0; x < q.size(); ++x)
    for (Elem y = 0; y < q.size(); ++y) {
      if (qD.contains(x, y) != p.in_domain(into[x], into[y]))
        return {false, "D differs from the restriction at " + tuple_text(q, {x, y})};
      for (Elem z = 0; z < q.size(); ++z)
        if (qM.contains(x, y, z) != (p.mul(into[x], into[y]) == into[z]))
          return {false, "M differs from the restriction at " + tuple_text(q, {x, y, z})};
    }
  if (!check_axioms(q).ok()) return {false, "the subset structure is not a pregroup"};
  return {true, {}};
}

FiniteStructure induced_substructure(const Pregroup& p, std::span<const Elem> subset) {
  std::vector<Elem> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  auto in = [&](Elem x) { return std::binary_search(s.begin(), s.end(), x); };
  if (!in(p.identity())) throw Error("induced substructure must contain the identity");
  StructureData d;
  d.signature = pregroup_signature();
  for (Elem x : s) d.carrier.push_back(p.id(x));
  d.constants["1"] = p.id(p.identity());
  auto& inv = d.functions["inv"];
  auto& D = d.relations["D"];
  auto& M = d.relations["M"];
  for (Elem x : s) {
    if (!in(p.inv(x))) throw Error("subset is not closed under inversion at '" + p.id(x) + "'");
    inv[{p.id(x)}] = p.id(p.inv(x));
    for (Elem y : s) {
      Elem z = p.mul(x, y);
      if (z == kNoElem || !in(z)) continue;
      D.push_back({p.id(x), p.id(y)});
      M.push_back({p.id(x), p.id(y), p.id(z)});
    }
  }
  return FiniteStructure(d);
}

SPregroup::SPregroup(Pregroup plain) : pregroup_(std::move(plain)) {}

SPregroup::SPregroup(FiniteStructure structure, std::vector<DesignatedSubset> family)
    : pregroup_(std::move(structure)), family_(std::move(family)) {
  validate();
}

std::vector<Elem> SPregroup::delta() const {
  std::vector<Elem> out;
  if (family_.empty()) return out;
  for (const auto& t : structure().relation("delta").tuples()) out.push_back(t[0]);
  return out;
}

void SPregroup::validate() {
  if (family_.empty()) return;
  const auto& m = structure();
  const auto& sig = m.signature();
  if (sig.relations.count("delta") == 0 || sig.relations.at("delta") != 1)
    throw Error("S-pregroup needs a unary relation 'delta'");
  std::set<std::string> names;
  for (const auto& k : family_) {
    if (!names.insert(k.name).second) throw Error("designated subset name '" + k.name + "' repeats");
    if (std::find(k.elements.begin(), k.elements.end(), pregroup_.identity()) == k.elements.end())
      throw Error("designated subset '" + k.name + "' does not contain the identity");
    std::set<Elem> seen;
    for (std::size_t i = 0; i < k.elements.size(); ++i) {
      if (!seen.insert(k.elements[i]).second)
        throw Error("designated subset '" + k.name + "' lists an element twice");
      auto c = k.constant_name(i);
      if (!sig.constants.count(c)) throw Error("missing designated constant '" + c + "'");
      if (m.constant(c) != k.elements[i]) throw Error("designated constant '" + c + "' has the wrong interpretation");
    }
  }
  // Axioms (ix) and (x), evaluated as sentences.
  for (const auto& k : family_) {
    for (std::size_t i = 0; i < k.elements.size(); ++i) {
      auto c = k.constant_name(i);
      if (!eval(m, parse_formula("delta(" + c + ")", sig)))
        throw Error("axiom (ix) fails for constant '" + c + "'");
      if (!eval(m, parse_formula("forall x . (delta(x) | x != " + c + ")", sig)))
        throw Error("axiom (x) fails for constant '" + c + "'");
    }
  }
  // delta is exactly the union of the designated subsets
  std::set<Elem> uni;
  for (const auto& k : family_) uni.insert(k.elements.begin(), k.elements.end());
  for (Elem x = 0; x < m.size(); ++x)
    if (m.relation("delta").contains(x) != (uni.count(x) > 0))
      throw Error("delta is not the union of the designated subsets (at '" + m.id(x) + "')");

  // Diagram of each subset: literals over its constants with terms of level <= 1.
  diagram_.clear();
  for (const auto& k : family_) {
    std::vector<Term> base, terms;
    for (std::size_t i = 0; i < k.elements.size(); ++i) base.push_back(Term::constant(k.constant_name(i)));
    terms = base;
    for (const auto& b : base) terms.push_back(Term::apply("inv", {b}));
    auto literal = [&](Formula atom) {
      bool truth = eval(m, atom);
      diagram_.push_back(truth ? std::move(atom) : Formula::negate(std::move(atom)));
    };
    for (std::size_t i = 0; i < terms.size(); ++i)
      for (const auto& b : base)
        if (!(terms[i] == b)) literal(Formula::eq(terms[i], b));
    for (const auto& x : base) {
      literal(Formula::rel("delta", {x}));
      for (const auto& y : base) {
        literal(Formula::rel("D", {x, y}));
        for (const auto& z : base) literal(Formula::rel("M", {x, y, z}));
      }
    }
    // distinct subset members name distinct elements
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j)
        if (eval(m, Formula::eq(base[i], base[j])))
          throw Error("designated constants of '" + k.name + "' coincide");
  }
  for (const auto& lit : diagram_)
    if (!eval(m, lit)) throw Error("diagram literal fails: " + to_string(lit));
}

SPregroup attach_constants(const Pregroup& p,
                           const std::vector<std::pair<std::string, std::vector<Elem>>>& family) {
  StructureData d = p.structure().data();
  if (d.signature.relations.count("delta")) throw Error("pregroup already carries a delta predicate");
  std::vector<DesignatedSubset> subsets;
  std::set<std::string> names;
  std::set<Elem> uni;
  for (const auto& [name, elems] : family) {
    if (!names.insert(name).second) throw Error("duplicate designated subset name '" + name + "'");
    if (std::find(elems.begin(), elems.end(), p.identity()) == elems.end())
      throw Error("designated subset '" + name + "' does not contain the identity");
    DesignatedSubset k{name, elems};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] >= p.size()) throw Error("designated element outside the carrier");
      auto c = k.constant_name(i);
      if (d.signature.kind(c) != SymbolKind::none) throw Error("duplicate constant name '" + c + "'");
      d.signature.constants.insert(c);
      d.constants[c] = p.id(elems[i]);
      uni.insert(elems[i]);
    }
    subsets.push_back(std::move(k));
  }
  d.signature.relations["delta"] = 1;
  auto& delta = d.relations["delta"];
  for (Elem x : uni) delta.push_back({p.id(x)});
  if (subsets.empty()) return SPregroup(p);
  return SPregroup(FiniteStructure(d), std::move(subsets));
}

SPregroup spregroup_from_document(const StructureDocument& doc) {
  FiniteStructure m(doc.data);
  if (doc.designated.empty()) return SPregroup(Pregroup(std::move(m)));
  std::vector<DesignatedSubset> family;
  for (const auto& [name, ids] : doc.designated) {
    DesignatedSubset k{name, {}};
    for (const auto& id : ids) k.elements.push_back(m.element(id));
    family.push_back(std::move(k));
  }
  return SPregroup(std::move(m), std::move(family));
}

StructureDocument to_document(const SPregroup& p) {
  StructureDocument doc;
  doc.data = p.structure().data();
  doc.kind = p.family().empty() ? "pregroup" : "spregroup";
  for (const auto& k : p.family()) doc.designated[k.name] = p.structure().ids(k.elements);
  return doc;
}

}  // namespace stallings
