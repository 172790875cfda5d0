#include "stallings/equations.hpp"

#include "stallings/morphism.hpp"

#include <algorithm>

namespace stallings {

EquationSystem::EquationSystem(std::vector<std::string> variables, std::vector<Formula> equations)
    : variables_(std::move(variables)), equations_(std::move(equations)) {
  std::set<std::string> vars(variables_.begin(), variables_.end());
  if (vars.size() != variables_.size()) throw Error("equation system lists a variable twice");
  for (const auto& e : equations_) {
    if (e.kind != Formula::Kind::equation) throw Error("not an equation: " + to_string(e));
    for (const auto& v : free_variables(e))
      if (!vars.count(v)) throw Error("equation " + to_string(e) + " uses undeclared variable '" + v + "'");
  }
}

EquationSystem EquationSystem::subsystem(const std::vector<std::size_t>& indices) const {
  std::vector<Formula> eqs;
  for (auto i : indices) eqs.push_back(equations_.at(i));
  return EquationSystem(variables_, std::move(eqs));
}

EquationSystem parse_equation_system(const std::vector<std::string>& texts, const Signature& sig,
                                     std::vector<std::string> variables) {
  std::vector<Formula> eqs;
  std::vector<std::string> seen;
  for (const auto& t : texts) {
    Formula f = parse_formula(t, sig);
    if (f.kind != Formula::Kind::equation) throw ParseError("expected an equation 'term = term': " + t, 0);
    for (const auto& side : f.terms) {
      // first-appearance order, left to right
      std::vector<std::string> order;
      std::vector<const Term*> stack{&side};
      while (!stack.empty()) {
        const Term* cur = stack.back();
        stack.pop_back();
        if (cur->kind == Term::Kind::variable) order.push_back(cur->name);
        for (auto it = cur->args.rbegin(); it != cur->args.rend(); ++it) stack.push_back(&*it);
      }
      for (auto& v : order)
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    }
    eqs.push_back(std::move(f));
  }
  if (variables.empty()) variables = seen;
  return EquationSystem(std::move(variables), std::move(eqs));
}

namespace {

// Satisfaction mask of each equation over carrier^m (row-major tuples).
std::vector<std::vector<std::uint8_t>> masks(const FiniteStructure& m, const EquationSystem& sys,
                                             std::vector<Tuple>& tuples) {
  for (const auto& e : sys.equations()) check_well_formed(e, m.signature());
  std::vector<Elem> all(m.size());
  for (Elem i = 0; i < all.size(); ++i) all[i] = i;
  tuples.clear();
  const auto arity = static_cast<int>(sys.variables().size());
  if (arity == 0) {
    tuples.emplace_back();
  } else {
    for_each_tuple(all, arity, [&](std::span<const Elem> t) {
      tuples.emplace_back(t.begin(), t.end());
      return true;
    });
  }
  std::vector<std::vector<std::uint8_t>> out;
  for (const auto& e : sys.equations()) {
    std::vector<std::uint8_t> mask(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      Assignment a;
      for (std::size_t v = 0; v < tuples[i].size(); ++v) a[sys.variables()[v]] = tuples[i][v];
      mask[i] = eval(m, e, a) ? 1 : 0;
    }
    out.push_back(std::move(mask));
  }
  return out;
}

std::vector<std::uint8_t> meet(const std::vector<std::vector<std::uint8_t>>& ms,
                               const std::vector<std::size_t>& pick, std::size_t width) {
  std::vector<std::uint8_t> acc(width, 1);
  for (auto i : pick)
    for (std::size_t j = 0; j < width; ++j) acc[j] &= ms[i][j];
  return acc;
}

}  // namespace

std::vector<Tuple> variety(const FiniteStructure& m, const EquationSystem& sys) {
  std::vector<Tuple> tuples;
  auto ms = masks(m, sys, tuples);
  std::vector<std::size_t> all(sys.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto acc = meet(ms, all, tuples.size());
  std::vector<Tuple> out;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    if (acc[i]) out.push_back(tuples[i]);
  return out;
}

EquationSystem noetherian_core(const FiniteStructure& m, const EquationSystem& sys) {
  if (sys.size() > kMaxCoreEquations)
    throw Error("noetherian_core: more than " + std::to_string(kMaxCoreEquations) + " equations");
  std::vector<Tuple> tuples;
  auto ms = masks(m, sys, tuples);
  std::vector<std::size_t> all(sys.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto target = meet(ms, all, tuples.size());
  for (std::size_t size = 0; size <= sys.size(); ++size) {
    for (const auto& pick : subsets_of_size(sys.size(), size)) {
      std::vector<std::size_t> idx(pick.begin(), pick.end());
      if (meet(ms, idx, tuples.size()) == target) return sys.subsystem(idx);
    }
  }
  return sys;
}

Formula transfer_sentence(const EquationSystem& core, const Formula& s) {
  if (s.kind != Formula::Kind::equation) throw Error("transfer_sentence: target is not an equation");
  const auto& vars = core.variables();
  for (const auto& v : free_variables(s))
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      throw Error("transfer_sentence: variable '" + v + "' is not among the system's variables");
  Formula body = s;
  if (core.size() > 0) {
    std::vector<Formula> parts(core.equations().begin(), core.equations().end());
    parts.push_back(Formula::negate(s));
    body = Formula::negate(Formula::conj_all(std::move(parts)));
  }
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::forall(*it, std::move(body));
  return body;
}

}  // namespace stallings
