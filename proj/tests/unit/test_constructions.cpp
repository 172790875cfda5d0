#include "doctest.h"

#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "stallings/morphism.hpp"
#include "stallings/ugroup.hpp"

using namespace stallings;
using namespace fixtures;

namespace {

std::vector<Elem> everything(std::size_t n) {
  std::vector<Elem> v(n);
  for (Elem i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("FiniteGroup validation") {
  CHECK_NOTHROW(FiniteGroup::cyclic(5));
  CHECK(FiniteGroup::cyclic(3).elements() == std::vector<std::string>{"1", "g", "g2"});
  // not associative / no inverses
  CHECK_THROWS_AS(FiniteGroup({"1", "a", "b"}, {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup({"1", "a"}, {{0, 1}, {1, 1}}), Error);
  auto g = parse_group(R"({"cyclic": 4, "names": ["e","r","r2","r3"]})");
  CHECK(g.mul(1, 3) == 0);
}

TEST_CASE("group_as_pregroup") {
  CHECK(check_axioms(z3_pregroup().structure()).ok());
  auto z2 = group_as_pregroup(FiniteGroup::cyclic(2));
  CHECK(z2.structure().carrier() == std::vector<std::string>{"1", "g"});
  CHECK(z2.structure().relation("M").tuples().size() == 4);
  auto one = group_as_pregroup(FiniteGroup::cyclic(1));
  CHECK(one.size() == 1);
  CHECK(one.structure().relation("M").tuples().size() == 1);
}

TEST_CASE("free_product_pregroup") {
  CHECK(pg_dinf().structure().carrier() == std::vector<std::string>{"1", "a", "b"});
  auto f = free_product_pregroup(FiniteGroup::cyclic(2, {"1", "a"}), FiniteGroup::cyclic(3, {"1", "b", "B"}));
  CHECK(f.pregroup().size() == 4);
  CHECK(check_axioms(f.pregroup().structure()).ok());

  auto b = FiniteGroup::cyclic(3, {"1", "b", "B"});
  auto t = free_product_pregroup(FiniteGroup::cyclic(1), b);
  auto plain = group_as_pregroup(b);
  auto all = everything(plain.size());
  CHECK(find_isomorphism(all, plain.structure(), t.pregroup().structure()).has_value());
}

TEST_CASE("amalgam_pregroup") {
  const auto& p = pg_am();
  CHECK(p.structure().carrier() == std::vector<std::string>{"1", "c", "x", "X", "y", "Y"});
  CHECK(p.product(p.element("x"), p.element("c")) == p.element("X"));
  CHECK(p.product(p.element("c"), p.element("y")) == p.element("Y"));
  CHECK(p.product(p.element("c"), p.element("c")) == p.identity());
  CHECK(check_axioms(p.structure()).ok());
  CHECK(am().spregroup().delta() == std::vector<Elem>{p.identity(), p.element("c")});

  auto z2 = FiniteGroup::cyclic(2, {"1", "c"});
  // c must go to an element of order 2
  CHECK_THROWS_AS(amalgam_pregroup(z4("x", "X"), z4("y", "Y"), z2, {0, 2}, {0, 1}), Error);
  CHECK_THROWS_AS(amalgam_pregroup(z4("x", "X"), z4("y", "Y"), z2, {0, 0}, {0, 1}), Error);
  CHECK_THROWS_AS(amalgam_pregroup(z4("x", "X"), z4("y", "Y"), FiniteGroup::cyclic(1), {0}, {0}), Error);
}

TEST_CASE("hnn_pregroup") {
  const auto& h = hnn_z2();
  CHECK(h.pregroup().structure().carrier() == std::vector<std::string>{"1", "g", "ti", "ti_g", "t", "g_t"});
  CHECK(check_axioms(h.pregroup().structure()).ok());
  const auto& s = h.spregroup().structure();
  CHECK(s.constant("C1_1") == s.element("g"));
  CHECK(s.constant("C2_1") == s.element("g"));

  for (std::size_t n : {2u, 3u, 4u}) {
    auto c = hnn_pregroup({FiniteGroup::cyclic(n), {0}, {0}, {0}, "t"});
    CHECK(c.pregroup().size() == 4 * n - 1);
    CHECK(check_axioms(c.pregroup().structure()).ok());
  }

  // Klein four group with theta swapping two order-2 subgroups
  FiniteGroup v4({"1", "p", "q", "r"}, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  auto k = hnn_pregroup({v4, {0, 1}, {0, 2}, {0, 2}, "t"});
  CHECK(check_axioms(k.pregroup().structure()).ok());
  const auto& ks = k.spregroup().structure();
  CHECK(ks.constant("C1_1") != ks.constant("C2_1"));

  CHECK_THROWS_AS(hnn_pregroup({v4, {0, 1}, {0, 2}, {0, 1}, "t"}), Error);
  CHECK_THROWS_AS(hnn_pregroup({v4, {0, 1}, {0, 2, 1}, {0, 2}, "t"}), Error);
}

TEST_CASE("oracle_normal_form") {
  const auto& d = dinf();
  CHECK(oracle_normal_form(d, w(d.pregroup(), "a,a,b")) == oracle_normal_form(d, w(d.pregroup(), "b")));
  CHECK(oracle_normal_form(d, w(d.pregroup(), "a,a")) == "");
  const auto& a = am();
  CHECK(oracle_normal_form(a, w(a.pregroup(), "x,y")) == oracle_normal_form(a, w(a.pregroup(), "X,Y")));
  const auto& h = hnn_z2();
  CHECK(oracle_normal_form(h, w(h.pregroup(), "ti,g_t")) == oracle_normal_form(h, w(h.pregroup(), "g")));
  CHECK(oracle_normal_form(h, w(h.pregroup(), "ti,t")) == "");
  CHECK(oracle_normal_form(h, w(h.pregroup(), "t,t")) != oracle_normal_form(h, w(h.pregroup(), "t")));
}

TEST_CASE("oracles agree with equivalent on all short words") {
  for (const Construction* c : {&dinf(), &am(), &hnn_z2()}) {
    const Pregroup& p = c->pregroup();
    std::vector<Word> words;
    for (std::size_t n = 0; n <= 2; ++n)
      for (auto& u : brute::all_words(p.size(), n)) words.push_back(u);
    std::vector<std::string> forms;
    for (auto& u : words) forms.push_back(oracle_normal_form(*c, u));
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < words.size(); ++j)
        CHECK(equivalent(p, words[i], words[j]) == (forms[i] == forms[j]));
  }
}

TEST_CASE("construct_from_spec") {
  auto c = construct_from_spec(read_text_file(STALLINGS_DATA_DIR "/specs/amalgam_z4_z4.json"));
  CHECK(c.kind == ConstructionKind::amalgam);
  CHECK(c.pregroup().structure().carrier() == pg_am().structure().carrier());
  auto h = construct_from_spec(read_text_file(STALLINGS_DATA_DIR "/specs/hnn_z2.json"), ConstructionKind::hnn);
  CHECK(h.sidecar.at("ti_g_t") == "g");
  CHECK(h.sidecar.size() == 8);
  CHECK_THROWS_AS(construct_from_spec(read_text_file(STALLINGS_DATA_DIR "/specs/hnn_z2.json"), ConstructionKind::free),
                  Error);
  CHECK_THROWS_AS(construct_from_spec(R"({"kind":"free","a":{"cyclic":2},"b":{"cyclic":2},"x":1})"), Error);
  CHECK_THROWS_AS(parse_construction_kind("tree"), Error);
}
