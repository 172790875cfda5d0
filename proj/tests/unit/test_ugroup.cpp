#include "doctest.h"

#include <set>

#include "brute.hpp"
#include "fixtures.hpp"
#include "stallings/ugroup.hpp"

using namespace stallings;
using namespace fixtures;

TEST_CASE("reduce") {
  const auto& d = pg_dinf();
  CHECK(reduce(d, w(d, "a,a,b")) == w(d, "b"));
  CHECK(reduce(d, w(d, "a,b,a")) == w(d, "a,b,a"));
  const auto& z = z3_pregroup();
  CHECK(reduce(z, w(z, "1,1,1")) == w(z, "0"));
  CHECK(reduce(d, {}) == Word{d.identity()});

  // never longer, always reduced, same class as the rightmost strategy
  for (auto& f : all_pregroups()) {
    const Pregroup& p = *f.p;
    for (std::size_t n = 0; n <= 4; ++n)
      for (auto& u : brute::all_words(p.size(), n)) {
        auto r = reduce(p, u);
        CHECK(r.size() <= std::max<std::size_t>(n, 1));
        CHECK(is_reduced(p, r));
        CHECK(equivalent(p, r, brute::reduce_rightmost(p, u)));
      }
  }
}

TEST_CASE("is_reduced") {
  const auto& d = pg_dinf();
  CHECK(is_reduced(d, w(d, "a,b,a,b")));
  CHECK_FALSE(is_reduced(d, w(d, "a,a")));
  for (Elem e = 0; e < d.size(); ++e) CHECK(is_reduced(d, {e}));
}

TEST_CASE("interleave") {
  const auto& am = pg_am();
  CHECK(interleave(am, w(am, "x,y"), w(am, "c")) == w(am, "X,Y"));
  const auto& d = pg_dinf();
  CHECK_FALSE(interleave(d, w(d, "a,b"), w(d, "a")).has_value());
  CHECK_THROWS_AS(interleave(d, w(d, "a,b"), {}), Error);
  for (auto& f : all_pregroups()) {
    const Pregroup& p = *f.p;
    for (auto& u : brute::reduced_words(p, 1, 3)) {
      CHECK(interleave(p, u, Word(u.size() - 1, p.identity())) == u);
      for (auto& a : brute::all_words(p.size(), u.size() - 1)) {
        auto e = interleave(p, u, a);
        CHECK(e == brute::interleave(p, u, a));
        if (e) CHECK(is_reduced(p, *e));
      }
    }
  }
}

TEST_CASE("equivalent") {
  const auto& am = pg_am();
  CHECK(equivalent(am, w(am, "x,y"), w(am, "X,Y")));
  const auto& d = pg_dinf();
  CHECK_FALSE(equivalent(d, w(d, "a,b"), w(d, "b,a")));

  for (auto& f : all_pregroups()) {
    const Pregroup& p = *f.p;
    auto words = brute::reduced_words(p, 1, 3);
    for (auto& u : words) {
      CHECK(equivalent(p, u, u));
      for (auto& v : words) {
        bool e = equivalent(p, u, v);
        CHECK(e == brute::equivalent(p, u, v));
        CHECK(e == equivalent(p, v, u));
        CHECK(e == (canonical(p, u) == canonical(p, v)));
      }
    }
  }
}

TEST_CASE("equivalent is transitive") {
  const Pregroup& p = pg_am();
  auto words = brute::reduced_words(p, 2, 2);
  for (auto& u : words)
    for (auto& v : words) {
      if (!equivalent(p, u, v)) continue;
      for (auto& x : words)
        if (equivalent(p, v, x)) CHECK(equivalent(p, u, x));
    }
}

TEST_CASE("canonical") {
  const auto& am = pg_am();
  CHECK(canonical(am, w(am, "X,Y")).word() == w(am, "x,y"));
  for (Elem e = 0; e < am.size(); ++e) CHECK(canonical(am, {e}).word() == Word{e});
  const auto& d = pg_dinf();
  CHECK(canonical(d, w(d, "a,a,b")) == canonical(d, w(d, "b")));
  CHECK(canonical(d, {}).is_identity());
  CHECK(canonical(d, {}).length() == 0);
  CHECK_THROWS_AS(canonical(d, w(d, "a,b,a,b,a,b,a,b,a")), Error);
  CHECK(canonical(d, w(d, "a,b,a,b,a,b,a,b")).length() == 8);
}

TEST_CASE("u_mul, u_inv and embed") {
  const auto& d = pg_dinf();
  auto ab = canonical(d, w(d, "a,b"));
  auto ba = canonical(d, w(d, "b,a"));
  auto one = u_identity(d);
  CHECK(u_mul(ab, ba) == one);
  CHECK(u_mul(ab, one) == ab);
  CHECK(u_mul(embed(d, d.element("a")), embed(d, d.element("b"))) == ab);
  CHECK(u_inv(ab) == ba);
  CHECK(u_inv(one) == one);
  const auto& am = pg_am();
  CHECK(u_inv(embed(am, am.element("x"))) == embed(am, am.element("X")));
  CHECK(embed(d, d.identity()) == one);
  CHECK(u_mul(embed(d, d.element("a")), embed(d, d.element("a"))) == one);
  CHECK_THROWS_AS(u_mul(ab, u_identity(am)), Error);

  for (auto& f : all_pregroups()) {
    const Pregroup& p = *f.p;
    std::set<Word> seen;
    for (Elem x = 0; x < p.size(); ++x) {
      seen.insert(embed(p, x).word());
      for (Elem y = 0; y < p.size(); ++y)
        if (p.in_domain(x, y)) CHECK(embed(p, p.mul(x, y)) == u_mul(embed(p, x), embed(p, y)));
    }
    CHECK(seen.size() == p.size());
  }
}

TEST_CASE("subgroup_agreement") {
  const auto& p = pg_dinf();
  std::vector<Elem> sub{p.identity(), p.element("a")};
  Pregroup q(induced_substructure(p, sub));
  auto r = subgroup_agreement(q, p, w(q, "a"), w(q, "a"));
  CHECK((r.in_q && r.in_p));
  r = subgroup_agreement(q, p, w(q, "a"), w(q, "1"));
  CHECK((!r.in_q && !r.in_p));
  CHECK_THROWS_AS(subgroup_agreement(pg_am(), p, {}, {}), Error);
}
