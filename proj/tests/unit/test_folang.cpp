#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "stallings/formula.hpp"
#include "stallings/morphism.hpp"

using namespace stallings;
using namespace fixtures;

namespace {

const Signature& psig() { return pregroup_signature(); }

// Structural recursion kept apart from the library's metadata().
std::size_t ref_level(const Term& t) {
  std::size_t l = 0;
  for (auto& a : t.args) l = std::max(l, ref_level(a) + 1);
  return t.kind == Term::Kind::application ? std::max<std::size_t>(l, 1) : 0;
}

void ref_constants(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::constant) out.insert(t.name);
  for (auto& a : t.args) ref_constants(a, out);
}

Metadata ref_metadata(const Formula& f) {
  Metadata m;
  switch (f.kind) {
    case Formula::Kind::equation:
    case Formula::Kind::relation:
      for (auto& t : f.terms) {
        m.level = std::max(m.level, ref_level(t));
        ref_constants(t, m.constants);
      }
      return m;
    case Formula::Kind::negation:
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      m = ref_metadata(f.sub[0]);
      m.degree += 1;
      return m;
    default: {
      auto a = ref_metadata(f.sub[0]);
      auto b = ref_metadata(f.sub[1]);
      a.level = std::max(a.level, b.level);
      a.degree += b.degree;
      a.constants.insert(b.constants.begin(), b.constants.end());
      return a;
    }
  }
}

// Random formulas over the pregroup language with variables x, y, z.
struct Gen {
  std::mt19937_64 rng;
  const char* vars[3] = {"x", "y", "z"};

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

  Term term(int depth) {
    std::size_t r = pick(depth > 0 ? 5 : 4);
    if (r == 4) return Term::apply("inv", {term(depth - 1)});
    if (r == 3) return Term::constant("1");
    return Term::var(vars[r]);
  }

  Formula atom() {
    switch (pick(3)) {
      case 0: return Formula::eq(term(2), term(2));
      case 1: return Formula::rel("D", {term(1), term(1)});
      default: return Formula::rel("M", {term(1), term(1), term(1)});
    }
  }

  Formula formula(int quantifiers, int size) {
    if (size <= 0) return atom();
    std::size_t r = pick(quantifiers > 0 ? 6 : 4);
    switch (r) {
      case 0: return Formula::negate(formula(quantifiers, size - 1));
      case 1: return Formula::conj(formula(quantifiers, size / 2), formula(quantifiers, size / 2));
      case 2: return Formula::disj(formula(quantifiers, size / 2), formula(quantifiers, size / 2));
      case 3: return atom();
      case 4: return Formula::exists(vars[pick(3)], formula(quantifiers - 1, size - 1));
      default: return Formula::forall(vars[pick(3)], formula(quantifiers - 1, size - 1));
    }
  }
};

template <typename F>
void for_each_assignment(const FiniteStructure& m, F&& f) {
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y)
      for (Elem z = 0; z < m.size(); ++z) f(Assignment{{"x", x}, {"y", y}, {"z", z}});
}

}  // namespace

TEST_CASE("parse") {
  auto f = parse_formula("forall x . (M(x,1,x) & M(1,x,x))", psig());
  auto x = Term::var("x");
  auto one = Term::constant("1");
  CHECK(f == Formula::forall("x", Formula::conj(Formula::rel("M", {x, one, x}), Formula::rel("M", {one, x, x}))));

  auto g = parse_formula("exists z . M(x,y,z)", psig());
  CHECK(free_variables(g) == std::set<std::string>{"x", "y"});

  CHECK_THROWS_AS(parse_formula("M(x,1)", psig()), ParseError);
  CHECK_THROWS_AS(parse_formula("Q(x)", psig()), ParseError);
  CHECK_THROWS_AS(parse_formula("exists x . (x = 1", psig()), ParseError);

  CHECK(parse_formula("x != y", psig()) == Formula::negate(Formula::eq(Term::var("x"), Term::var("y"))));

  // rendering round-trips
  Gen gen{std::mt19937_64(5)};
  for (int i = 0; i < 200; ++i) {
    auto h = gen.formula(3, 6);
    CHECK(parse_formula(to_string(h), psig()) == h);
  }
}

TEST_CASE("metadata") {
  Signature sig = psig();
  sig.constants.insert("c");
  auto m = metadata(parse_formula("x = c", sig));
  CHECK(m.level == 0);
  CHECK(m.degree == 0);
  CHECK(m.constants == std::set<std::string>{"c"});

  CHECK(metadata(parse_formula("!(x = 1)", psig())).degree == 1);

  m = metadata(parse_formula("inv(inv(x)) = x", psig()));
  CHECK(m.level == 2);
  CHECK(m.degree == 0);
  CHECK(m.constants.empty());

  Gen gen{std::mt19937_64(11)};
  for (int i = 0; i < 300; ++i) {
    auto f = gen.formula(3, 8);
    auto a = metadata(f);
    auto b = ref_metadata(f);
    CHECK(a.level == b.level);
    CHECK(a.degree == b.degree);
    CHECK(a.constants == b.constants);
  }
}

TEST_CASE("to_prenex") {
  auto p = to_prenex(parse_formula("!(exists x . x = 1)", psig()));
  CHECK(p == parse_formula("forall x . !(x = 1)", psig()));

  auto already = parse_formula("forall x . exists y . M(x,y,1)", psig());
  CHECK(to_prenex(already) == already);

  auto f = parse_formula("(exists x . x = 1) & (exists x . x = y)", psig());
  auto q = to_prenex(f);
  CHECK(is_prenex(q));
  REQUIRE(q.kind == Formula::Kind::exists);
  REQUIRE(q.sub[0].kind == Formula::Kind::exists);
  CHECK(q.name != q.sub[0].name);
  auto z = z3_pregroup().structure();
  for (Elem y = 0; y < z.size(); ++y) CHECK(eval(z, q, {{"y", y}}) == eval(z, f, {{"y", y}}));
}

TEST_CASE("prenex and duality agree with eval on random formulas") {
  Gen gen{std::mt19937_64(3)};
  std::vector<const FiniteStructure*> ms{&z3_pregroup().structure(), &pg_dinf().structure(),
                                         &pg_am().structure(), &pg_hnn().structure()};
  for (int i = 0; i < 120; ++i) {
    auto f = gen.formula(3, 6);
    auto g = gen.formula(2, 4);
    auto p = to_prenex(f);
    REQUIRE(is_prenex(p));
    auto por = Formula::disj(f, g);
    auto dual = Formula::negate(Formula::conj(Formula::negate(f), Formula::negate(g)));
    auto all = Formula::forall("x", f);
    auto not_ex = Formula::negate(Formula::exists("x", Formula::negate(f)));
    for (auto* m : ms) {
      if (m->size() > 6) continue;
      for_each_assignment(*m, [&](const Assignment& a) {
        bool v = eval(*m, f, a);
        CHECK(eval(*m, p, a) == v);
        CHECK(eval(*m, por, a) == eval(*m, dual, a));
        CHECK(eval(*m, all, a) == eval(*m, not_ex, a));
      });
    }
  }
}

TEST_CASE("eval") {
  auto g = z3_structure("1");
  CHECK(eval(g, parse_formula("forall x . exists y . x * y = 1", g.signature())));
  const auto& d = pg_dinf().structure();
  CHECK_FALSE(eval(d, parse_formula("D(a,b)", psig()), {{"a", d.element("a")}, {"b", d.element("b")}}));
  CHECK(eval(d, parse_formula("exists z . M(a,a,z)", psig()), {{"a", d.element("a")}}));
  CHECK_THROWS_AS(eval(d, parse_formula("x = 1", psig())), Error);
}

TEST_CASE("classify") {
  CHECK(classify(parse_formula("forall x . forall y . (D(x,y) | !D(x,y))", psig())) == SentenceClass::universal);
  CHECK(classify(parse_formula("exists x . x != 1", psig())) == SentenceClass::existential);
  CHECK(classify(parse_formula("forall x . exists y . M(x,y,1)", psig())) == SentenceClass::neither);
  CHECK(classify(parse_formula("!(exists x . x = 1)", psig())) == SentenceClass::universal);
  CHECK_THROWS_AS(classify(parse_formula("x = 1", psig())), Error);
}

TEST_CASE("characteristic_sentence") {
  const auto& d = pg_dinf().structure();
  auto fa = characteristic_sentence(d, {d.element("a")});
  CHECK(fa == parse_formula("exists x1 . (x1 != 1 & inv(x1) = x1 & D(x1,x1) & !M(x1,x1,x1))", psig()));
  auto f1 = characteristic_sentence(d, {d.element("1")});
  CHECK(f1 == parse_formula("exists x1 . (x1 = 1 & inv(x1) = x1 & D(x1,x1) & M(x1,x1,x1))", psig()));
  CHECK(eval(d, fa));

  // existential and satisfied at home; agrees with find_isomorphism
  std::vector<const FiniteStructure*> ms{&z3_pregroup().structure(), &d, &pg_am().structure(),
                                         &dinf_swapped().structure()};
  for (auto* m : ms)
    for (std::size_t k = 0; k <= 2; ++k)
      for (auto& s : subsets_of_size(m->size(), k)) {
        auto phi = characteristic_sentence(*m, s);
        CHECK(classify(phi) == SentenceClass::existential);
        CHECK(eval(*m, phi));
        for (auto* n : ms)
          if (n->signature() == m->signature())
            CHECK(eval(*n, phi) == find_isomorphism(s, *m, *n).has_value());
      }

  // the designated-constant form with delta
  const auto& sam = am().spregroup().structure();
  for (auto& s : subsets_of_size(sam.size(), 2)) {
    auto phi = characteristic_sentence(sam, s);
    CHECK(eval(sam, phi));
    CHECK(eval(am_swapped().structure(), phi) == find_isomorphism(s, sam, am_swapped().structure()).has_value());
  }
}
