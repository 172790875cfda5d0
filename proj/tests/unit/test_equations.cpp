#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "stallings/equations.hpp"

using namespace stallings;
using namespace fixtures;

namespace {

Tuple t(const FiniteStructure& m, std::initializer_list<const char*> names) {
  Tuple out;
  for (auto n : names) out.push_back(m.element(n));
  return out;
}

bool subset_of(const std::vector<Tuple>& a, const std::vector<Tuple>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("variety") {
  auto z = z3_structure("0");
  auto sys = parse_equation_system({"x*x = y"}, z.signature());
  CHECK(variety(z, sys) == std::vector<Tuple>{t(z, {"0", "0"}), t(z, {"1", "2"}), t(z, {"2", "1"})});

  EquationSystem empty({"x"}, {});
  CHECK(variety(z, empty).size() == 3);

  CHECK_THROWS_AS(parse_equation_system({"x != y"}, z.signature()), Error);
  CHECK_THROWS_AS(EquationSystem({"x"}, {parse_formula("x = y", z.signature())}), Error);
}

TEST_CASE("noetherian_core") {
  auto z = z3_structure("0");
  auto sys = parse_equation_system({"x = x", "x*x = y", "(x*x)*0 = y"}, z.signature());
  auto core = noetherian_core(z, sys);
  REQUIRE(core.size() == 1);
  CHECK(core.equations()[0] == sys.equations()[1]);

  auto proper = parse_equation_system({"x*x = x"}, z.signature());
  CHECK(noetherian_core(z, proper).size() == 1);
  auto valid = parse_equation_system({"x = x"}, z.signature());
  CHECK(noetherian_core(z, valid).size() == 0);
  CHECK(noetherian_core(z, EquationSystem({"x"}, {})).size() == 0);

  std::vector<std::string> many(kMaxCoreEquations + 1, "x = x");
  CHECK_THROWS_AS(noetherian_core(z, parse_equation_system(many, z.signature())), Error);
}

TEST_CASE("transfer_sentence") {
  auto z = z3_structure("0");
  const auto& sig = z.signature();
  auto core = parse_equation_system({"x*x = y"}, sig);
  auto s = parse_formula("(x*x)*0 = y", sig);
  auto phi = transfer_sentence(core, s);
  CHECK(classify(phi) == SentenceClass::universal);
  CHECK(eval(z, phi));

  auto refl = transfer_sentence(EquationSystem({"x"}, {}), parse_formula("x = x", sig));
  CHECK(refl == parse_formula("forall x . x = x", sig));
  CHECK(eval(z, refl));

  auto zero = parse_equation_system({"x = 0"}, sig);
  CHECK(eval(z, transfer_sentence(zero, parse_formula("x*x = 0", sig))));
  CHECK_FALSE(eval(z, transfer_sentence(EquationSystem({"x"}, {}), parse_formula("x*x = 0", sig))));

  CHECK_THROWS_AS(transfer_sentence(zero, parse_formula("y = 0", sig)), Error);
}

TEST_CASE("core properties on random systems") {
  auto z = z3_structure("0");
  const auto& sig = z.signature();
  std::mt19937_64 rng(17);
  const std::vector<std::string> vars{"x", "y", "z"};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::function<std::string(int)> term = [&](int depth) -> std::string {
    std::size_t r = pick(depth > 0 ? 6 : 4);
    if (r < 3) return vars[r];
    if (r == 3) return "0";
    if (r == 4) return "inv(" + term(depth - 1) + ")";
    return "(" + term(depth - 1) + " * " + term(depth - 1) + ")";
  };
  for (int round = 0; round < 40; ++round) {
    std::vector<std::string> texts;
    std::size_t n = 1 + pick(6);
    for (std::size_t i = 0; i < n; ++i) texts.push_back(term(2) + " = " + term(2));
    auto sys = parse_equation_system(texts, sig, vars);
    auto full = variety(z, sys);
    auto core = noetherian_core(z, sys);
    CHECK(variety(z, core) == full);
    for (auto& e : sys.equations()) CHECK(eval(z, transfer_sentence(core, e)));

    // antitone: dropping the last equation never shrinks the variety
    std::vector<std::size_t> prefix(n - 1);
    std::iota(prefix.begin(), prefix.end(), 0);
    CHECK(subset_of(full, variety(z, sys.subsystem(prefix))));
  }
}
