#include <algorithm>

#include "stallings/formula.hpp"

namespace stallings {

namespace {

std::string variable_name(const Signature& sig, std::size_t i) {
  std::string base = "x" + std::to_string(i + 1);
  while (sig.kind(base) != SymbolKind::none) base = "_" + base;
  return base;
}

}  // namespace

Formula characteristic_sentence(const FiniteStructure& m, const std::vector<Elem>& subset) {
  const auto& sig = m.signature();
  if (subset.empty()) {
    auto x = variable_name(sig, 0);
    return Formula::exists(x, Formula::eq(Term::var(x), Term::var(x)));
  }
  std::vector<int> index(m.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    Elem e = subset[i];
    if (e >= m.size()) throw Error("characteristic_sentence: element outside the carrier");
    if (index[e] >= 0) throw Error("characteristic_sentence: repeated element '" + m.id(e) + "'");
    index[e] = static_cast<int>(i);
  }
  const std::size_t k = subset.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(variable_name(sig, i));
  auto var = [&](std::size_t i) { return Term::var(names[i]); };

  std::vector<Formula> clauses;

  // distinctness
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) clauses.push_back(Formula::neq(var(i), var(j)));

  // constants
  const bool delta_form = sig.relations.count("delta") && sig.relations.at("delta") == 1;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& own = m.constants_at(subset[i]);
    for (const auto& c : own) clauses.push_back(Formula::eq(var(i), Term::constant(c)));
    if (own.empty() && delta_form) {
      clauses.push_back(Formula::negate(Formula::rel("delta", {var(i)})));
      continue;
    }
    if (delta_form) continue;
    for (const auto& c : sig.constants)
      if (!std::binary_search(own.begin(), own.end(), c)) clauses.push_back(Formula::neq(var(i), Term::constant(c)));
  }

  // function values: pinned to a subset variable when they land in the
  // subset, otherwise excluded from every subset variable
  std::vector<Elem> positions(k);
  for (std::size_t i = 0; i < k; ++i) positions[i] = static_cast<Elem>(i);
  for (const auto& f : m.functions()) {
    std::vector<Elem> args(static_cast<std::size_t>(f.arity()));
    for_each_tuple(positions, f.arity(), [&](std::span<const Elem> idx) {
      std::vector<Term> arg_terms;
      for (std::size_t p = 0; p < idx.size(); ++p) {
        args[p] = subset[idx[p]];
        arg_terms.push_back(var(idx[p]));
      }
      Term lhs = Term::apply(f.name(), arg_terms);
      int s = index[f(args)];
      if (s >= 0) {
        clauses.push_back(Formula::eq(lhs, var(static_cast<std::size_t>(s))));
      } else {
        for (std::size_t j = 0; j < k; ++j) clauses.push_back(Formula::neq(lhs, var(j)));
      }
      return true;
    });
  }

  // full relation diagram
  for (const auto& r : m.relations()) {
    std::vector<Elem> tuple(static_cast<std::size_t>(r.arity()));
    for_each_tuple(positions, r.arity(), [&](std::span<const Elem> idx) {
      std::vector<Term> arg_terms;
      for (std::size_t p = 0; p < idx.size(); ++p) {
        tuple[p] = subset[idx[p]];
        arg_terms.push_back(var(idx[p]));
      }
      Formula atom = Formula::rel(r.name(), std::move(arg_terms));
      clauses.push_back(r.contains(tuple) ? std::move(atom) : Formula::negate(std::move(atom)));
      return true;
    });
  }

  if (clauses.empty()) clauses.push_back(Formula::eq(var(0), var(0)));
  Formula body = Formula::conj_all(std::move(clauses));
  for (std::size_t i = k; i-- > 0;) body = Formula::exists(names[i], std::move(body));
  return body;
}

}  // namespace stallings
