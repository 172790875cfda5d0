#include <algorithm>
#include <utility>

#include "stallings/formula.hpp"

namespace stallings {

namespace {

// Variable bindings as a stack; inner quantifiers shadow outer ones.
class Env {
 public:
  explicit Env(const Assignment& a) {
    for (const auto& [name, e] : a) frames_.emplace_back(&name, e);
  }

  Elem lookup(const std::string& name) const {
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it)
      if (*it->first == name) return it->second;
    throw Error("unassigned free variable '" + name + "'");
  }

  void push(const std::string& name, Elem e) { frames_.emplace_back(&name, e); }
  void set_top(Elem e) { frames_.back().second = e; }
  void pop() { frames_.pop_back(); }

 private:
  std::vector<std::pair<const std::string*, Elem>> frames_;
};

Elem term_value(const FiniteStructure& m, const Term& t, const Env& env) {
  switch (t.kind) {
    case Term::Kind::variable: return env.lookup(t.name);
    case Term::Kind::constant: return m.constant(t.name);
    case Term::Kind::application: {
      const auto& f = m.function(t.name);
      if (static_cast<int>(t.args.size()) != f.arity()) throw Error("arity mismatch for '" + t.name + "'");
      Elem buf[8];
      std::vector<Elem> big;
      std::span<Elem> args;
      if (t.args.size() <= 8) {
        args = std::span<Elem>(buf, t.args.size());
      } else {
        big.resize(t.args.size());
        args = big;
      }
      for (std::size_t i = 0; i < t.args.size(); ++i) args[i] = term_value(m, t.args[i], env);
      return f(std::span<const Elem>(args.data(), args.size()));
    }
  }
  return kNoElem;
}

bool holds(const FiniteStructure& m, const Formula& f, Env& env) {
  switch (f.kind) {
    case Formula::Kind::equation:
      return term_value(m, f.terms[0], env) == term_value(m, f.terms[1], env);
    case Formula::Kind::relation: {
      const auto& r = m.relation(f.name);
      if (static_cast<int>(f.terms.size()) != r.arity()) throw Error("arity mismatch for '" + f.name + "'");
      Elem buf[8];
      std::vector<Elem> big;
      std::span<Elem> args;
      if (f.terms.size() <= 8) {
        args = std::span<Elem>(buf, f.terms.size());
      } else {
        big.resize(f.terms.size());
        args = big;
      }
      for (std::size_t i = 0; i < f.terms.size(); ++i) args[i] = term_value(m, f.terms[i], env);
      return r.contains(std::span<const Elem>(args.data(), args.size()));
    }
    case Formula::Kind::negation: return !holds(m, f.sub[0], env);
    case Formula::Kind::conjunction: return holds(m, f.sub[0], env) && holds(m, f.sub[1], env);
    case Formula::Kind::disjunction: return holds(m, f.sub[0], env) || holds(m, f.sub[1], env);
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      bool want = f.kind == Formula::Kind::exists;
      env.push(f.name, 0);
      bool result = !want;
      for (Elem e = 0; e < m.size(); ++e) {
        env.set_top(e);
        if (holds(m, f.sub[0], env) == want) {
          result = want;
          break;
        }
      }
      env.pop();
      return result;
    }
  }
  return false;
}

}  // namespace

bool eval(const FiniteStructure& m, const Formula& f, const Assignment& a) {
  for (const auto& v : free_variables(f))
    if (!a.count(v)) throw Error("unassigned free variable '" + v + "'");
  for (const auto& [name, e] : a)
    if (e >= m.size()) throw Error("assignment of '" + name + "' outside the carrier");
  Env env(a);
  return holds(m, f, env);
}

Elem eval_term(const FiniteStructure& m, const Term& t, const Assignment& a) {
  Env env(a);
  return term_value(m, t, env);
}

namespace {

void all_names(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::variable) out.insert(t.name);
  for (const auto& a : t.args) all_names(a, out);
}

void all_names(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms) all_names(t, out);
  if (f.is_quantifier()) out.insert(f.name);
  for (const auto& s : f.sub) all_names(s, out);
}

class Renamer {
 public:
  explicit Renamer(const Formula& f) {
    used_ = free_variables(f);
    all_names(f, seen_);
  }

  Formula run(const Formula& f) { return rename(f); }

 private:
  Term rename(const Term& t) const {
    Term out = t;
    if (t.kind == Term::Kind::variable) {
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
        if (it->first == t.name) {
          out.name = it->second;
          break;
        }
    }
    for (auto& a : out.args) a = rename(a);
    return out;
  }

  Formula rename(const Formula& f) {
    Formula out = f;
    for (auto& t : out.terms) t = rename(t);
    if (f.is_quantifier()) {
      std::string fresh = f.name;
      for (int i = 1; used_.count(fresh) || (fresh != f.name && seen_.count(fresh)); ++i)
        fresh = f.name + "_" + std::to_string(i);
      used_.insert(fresh);
      scope_.emplace_back(f.name, fresh);
      out.name = fresh;
      out.sub[0] = rename(f.sub[0]);
      scope_.pop_back();
      return out;
    }
    for (auto& s : out.sub) s = rename(s);
    return out;
  }

  std::set<std::string> used_;
  std::set<std::string> seen_;
  std::vector<std::pair<std::string, std::string>> scope_;
};

struct Prefixed {
  std::vector<std::pair<Formula::Kind, std::string>> prefix;
  Formula matrix;
};

Prefixed pull(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::equation:
    case Formula::Kind::relation: return {{}, f};
    case Formula::Kind::negation: {
      auto inner = pull(f.sub[0]);
      for (auto& [q, v] : inner.prefix)
        q = q == Formula::Kind::exists ? Formula::Kind::forall : Formula::Kind::exists;
      return {std::move(inner.prefix), Formula::negate(std::move(inner.matrix))};
    }
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      auto a = pull(f.sub[0]);
      auto b = pull(f.sub[1]);
      a.prefix.insert(a.prefix.end(), b.prefix.begin(), b.prefix.end());
      Formula m = f.kind == Formula::Kind::conjunction ? Formula::conj(std::move(a.matrix), std::move(b.matrix))
                                                       : Formula::disj(std::move(a.matrix), std::move(b.matrix));
      return {std::move(a.prefix), std::move(m)};
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      auto inner = pull(f.sub[0]);
      inner.prefix.insert(inner.prefix.begin(), {f.kind, f.name});
      return inner;
    }
  }
  return {{}, f};
}

bool quantifier_free(const Formula& f) {
  if (f.is_quantifier()) return false;
  return std::all_of(f.sub.begin(), f.sub.end(), quantifier_free);
}

}  // namespace

Formula to_prenex(const Formula& f) {
  Formula renamed = Renamer(f).run(f);
  auto p = pull(renamed);
  Formula out = std::move(p.matrix);
  for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it)
    out = it->first == Formula::Kind::exists ? Formula::exists(it->second, std::move(out))
                                             : Formula::forall(it->second, std::move(out));
  return out;
}

bool is_prenex(const Formula& f) {
  const Formula* cur = &f;
  while (cur->is_quantifier()) cur = &cur->sub[0];
  return quantifier_free(*cur);
}

std::string_view to_string(SentenceClass c) {
  switch (c) {
    case SentenceClass::universal: return "universal";
    case SentenceClass::existential: return "existential";
    case SentenceClass::neither: return "neither";
    case SentenceClass::quantifier_free: return "quantifier-free";
  }
  return "?";
}

SentenceClass classify(const Formula& f) {
  if (!is_sentence(f)) throw Error("classify: formula has free variables");
  Formula p = to_prenex(f);
  bool any_exists = false, any_forall = false;
  const Formula* cur = &p;
  while (cur->is_quantifier()) {
    (cur->kind == Formula::Kind::exists ? any_exists : any_forall) = true;
    cur = &cur->sub[0];
  }
  if (any_exists && any_forall) return SentenceClass::neither;
  if (any_exists) return SentenceClass::existential;
  if (any_forall) return SentenceClass::universal;
  return SentenceClass::quantifier_free;
}

}  // namespace stallings
