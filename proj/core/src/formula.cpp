#include "stallings/formula.hpp"

#include <algorithm>

namespace stallings {

Formula Formula::eq(Term a, Term b) { return {Kind::equation, {}, {std::move(a), std::move(b)}, {}}; }

Formula Formula::neq(Term a, Term b) { return negate(eq(std::move(a), std::move(b))); }

Formula Formula::rel(std::string r, std::vector<Term> args) {
  return {Kind::relation, std::move(r), std::move(args), {}};
}

Formula Formula::negate(Formula f) { return {Kind::negation, {}, {}, {std::move(f)}}; }

Formula Formula::conj(Formula a, Formula b) { return {Kind::conjunction, {}, {}, {std::move(a), std::move(b)}}; }

Formula Formula::disj(Formula a, Formula b) { return {Kind::disjunction, {}, {}, {std::move(a), std::move(b)}}; }

Formula Formula::exists(std::string var, Formula body) {
  return {Kind::exists, std::move(var), {}, {std::move(body)}};
}

Formula Formula::forall(std::string var, Formula body) {
  return {Kind::forall, std::move(var), {}, {std::move(body)}};
}

Formula Formula::conj_all(std::vector<Formula> parts) {
  if (parts.empty()) throw Error("conjunction of an empty list");
  Formula acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(std::move(acc), std::move(parts[i]));
  return acc;
}

std::string to_string(const Term& t) {
  if (t.kind != Term::Kind::application) return t.name;
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ",";
    out += to_string(t.args[i]);
  }
  return out + ")";
}

namespace {

// Precedence: quantifier 0, disjunction 1, conjunction 2, unit 3.
int precedence(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::exists:
    case Formula::Kind::forall: return 0;
    case Formula::Kind::disjunction: return 1;
    case Formula::Kind::conjunction: return 2;
    default: return 3;
  }
}

std::string render(const Formula& f, int context) {
  std::string out;
  switch (f.kind) {
    case Formula::Kind::equation:
      out = to_string(f.terms[0]) + " = " + to_string(f.terms[1]);
      break;
    case Formula::Kind::relation: {
      out = f.name + "(";
      for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) out += ",";
        out += to_string(f.terms[i]);
      }
      out += ")";
      break;
    }
    case Formula::Kind::negation: {
      const auto& s = f.sub[0];
      if (s.kind == Formula::Kind::equation) return to_string(s.terms[0]) + " != " + to_string(s.terms[1]);
      return "!" + render(s, 3);
    }
    case Formula::Kind::conjunction:
      out = render(f.sub[0], 2) + " & " + render(f.sub[1], 3);
      break;
    case Formula::Kind::disjunction:
      out = render(f.sub[0], 1) + " | " + render(f.sub[1], 2);
      break;
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      out = std::string(f.kind == Formula::Kind::exists ? "exists " : "forall ") + f.name + " . " +
            render(f.sub[0], 0);
      break;
  }
  if (precedence(f) < context) return "(" + out + ")";
  return out;
}

}  // namespace

std::string to_string(const Formula& f) { return render(f, 0); }

std::size_t level(const Term& t) {
  if (t.kind != Term::Kind::application) return 0;
  std::size_t deepest = 0;
  for (const auto& a : t.args) deepest = std::max(deepest, level(a));
  return deepest + 1;
}

namespace {

void term_constants(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::constant) out.insert(t.name);
  for (const auto& a : t.args) term_constants(a, out);
}

}  // namespace

Metadata metadata(const Formula& f) {
  Metadata md;
  switch (f.kind) {
    case Formula::Kind::equation:
    case Formula::Kind::relation:
      for (const auto& t : f.terms) {
        md.level = std::max(md.level, level(t));
        term_constants(t, md.constants);
      }
      return md;
    case Formula::Kind::negation:
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      md = metadata(f.sub[0]);
      md.degree += 1;
      return md;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      auto a = metadata(f.sub[0]);
      auto b = metadata(f.sub[1]);
      md.level = std::max(a.level, b.level);
      md.degree = a.degree + b.degree;
      md.constants = std::move(a.constants);
      md.constants.insert(b.constants.begin(), b.constants.end());
      return md;
    }
  }
  return md;
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::variable) out.insert(t.name);
  for (const auto& a : t.args) collect_vars(a, out);
}

}  // namespace

std::set<std::string> variables(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  if (f.is_atomic()) {
    for (const auto& t : f.terms) collect_vars(t, out);
    return out;
  }
  for (const auto& s : f.sub) {
    auto v = free_variables(s);
    out.insert(v.begin(), v.end());
  }
  if (f.is_quantifier()) out.erase(f.name);
  return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

namespace {

void check_term(const Term& t, const Signature& sig) {
  switch (t.kind) {
    case Term::Kind::variable:
      if (sig.kind(t.name) != SymbolKind::none && sig.kind(t.name) != SymbolKind::constant)
        throw Error("symbol '" + t.name + "' used as a variable");
      return;
    case Term::Kind::constant:
      if (sig.kind(t.name) != SymbolKind::constant) throw Error("unknown constant '" + t.name + "'");
      return;
    case Term::Kind::application:
      if (sig.kind(t.name) != SymbolKind::function) throw Error("unknown function symbol '" + t.name + "'");
      if (static_cast<int>(t.args.size()) != sig.arity(t.name))
        throw Error("arity mismatch for '" + t.name + "'");
      for (const auto& a : t.args) check_term(a, sig);
      return;
  }
}

}  // namespace

void check_well_formed(const Formula& f, const Signature& sig) {
  switch (f.kind) {
    case Formula::Kind::equation:
      for (const auto& t : f.terms) check_term(t, sig);
      return;
    case Formula::Kind::relation:
      if (sig.kind(f.name) != SymbolKind::relation) throw Error("unknown relation symbol '" + f.name + "'");
      if (static_cast<int>(f.terms.size()) != sig.arity(f.name))
        throw Error("arity mismatch for '" + f.name + "'");
      for (const auto& t : f.terms) check_term(t, sig);
      return;
    default:
      for (const auto& s : f.sub) check_well_formed(s, sig);
  }
}

}  // namespace stallings
