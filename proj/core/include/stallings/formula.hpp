#pragma once

// First-order terms and formulas over a Signature, the ASCII formula
// grammar, satisfaction over finite structures, prenex conversion and
// sentence classification.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stallings/structure.hpp"

namespace stallings {

struct Term {
  enum class Kind { variable, constant, application };
  Kind kind = Kind::variable;
  std::string name;  // variable, constant or function symbol
  std::vector<Term> args;

  static Term var(std::string name) { return {Kind::variable, std::move(name), {}}; }
  static Term constant(std::string name) { return {Kind::constant, std::move(name), {}}; }
  static Term apply(std::string f, std::vector<Term> args) {
    return {Kind::application, std::move(f), std::move(args)};
  }

  bool operator==(const Term&) const = default;
};

struct Formula {
  enum class Kind { equation, relation, negation, conjunction, disjunction, exists, forall };
  Kind kind = Kind::equation;
  std::string name;          // relation symbol or bound variable
  std::vector<Term> terms;   // equation: 2 terms; relation: its arguments
  std::vector<Formula> sub;  // negation / quantifiers: 1; connectives: 2

  static Formula eq(Term a, Term b);
  static Formula neq(Term a, Term b);
  static Formula rel(std::string r, std::vector<Term> args);
  static Formula negate(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  // Left-nested conjunction of a non-empty list.
  static Formula conj_all(std::vector<Formula> parts);

  bool is_atomic() const { return kind == Kind::equation || kind == Kind::relation; }
  bool is_quantifier() const { return kind == Kind::exists || kind == Kind::forall; }

  bool operator==(const Formula&) const = default;
};

// Rendering in the grammar accepted by parse_formula (round-trips).
std::string to_string(const Term& t);
std::string to_string(const Formula& f);

struct Metadata {
  std::size_t level = 0;
  std::size_t degree = 0;
  std::set<std::string> constants;
};

std::size_t level(const Term& t);
Metadata metadata(const Formula& f);

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> variables(const Term& t);
bool is_sentence(const Formula& f);

// Checks symbols and arities against the signature; throws Error.
void check_well_formed(const Formula& f, const Signature& sig);

// Grammar (whitespace insensitive, names [A-Za-z0-9_]+):
//   formula := "forall" VAR "." formula | "exists" VAR "." formula | disj
//   disj    := conj ( "|" conj )*
//   conj    := unit ( "&" unit )*
//   unit    := "!" unit | "(" formula ")" | atom
//   atom    := term "=" term | term "!=" term | REL "(" term ("," term)* ")"
//   term    := factor ( "*" factor )*
//   factor  := CONST | VAR | FUNC "(" term ("," term)* ")" | "(" term ")"
// "*" is infix notation for a binary function symbol named "mul".  Names
// are resolved against the signature; constants shadow variables.
// Throws ParseError (with offset) on syntax errors, unknown symbols and
// arity mismatches.
Formula parse_formula(std::string_view text, const Signature& sig);
Term parse_term(std::string_view text, const Signature& sig);

using Assignment = std::map<std::string, Elem>;

// Satisfaction over a finite structure; quantifiers range over the whole
// carrier.  Throws Error if a free variable is unassigned.
bool eval(const FiniteStructure& m, const Formula& f, const Assignment& a = {});
Elem eval_term(const FiniteStructure& m, const Term& t, const Assignment& a);

// Bound variables renamed apart (and away from free variables), then all
// quantifiers pulled to the front.  The matrix keeps its connective
// structure; negations over quantifiers are pushed through with the
// usual dualities.
Formula to_prenex(const Formula& f);

bool is_prenex(const Formula& f);

enum class SentenceClass { universal, existential, neither, quantifier_free };
std::string_view to_string(SentenceClass c);

// Inspects the quantifier prefix of the prenex form.  Throws Error when f
// has free variables.
SentenceClass classify(const Formula& f);

// Existential sentence describing `subset` (listed in the given order) up to
// isomorphism:  exists x1..xk ( distinctness & constants & function values &
// relation diagram ).  Satisfied in a structure N iff find_isomorphism
// (subset -> N) succeeds.  The empty subset yields "exists x1 . x1 = x1".
Formula characteristic_sentence(const FiniteStructure& m, const std::vector<Elem>& subset);

}  // namespace stallings
