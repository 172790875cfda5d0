#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"

using namespace stallings;
using namespace fixtures;

namespace {

StructureData toggle_m(StructureData d, std::vector<std::string> tuple) {
  auto& m = d.relations["M"];
  auto it = std::find(m.begin(), m.end(), tuple);
  if (it == m.end())
    m.push_back(tuple);
  else
    m.erase(it);
  return d;
}

}  // namespace

TEST_CASE("check_axioms") {
  for (auto& f : all_pregroups()) {
    INFO(f.name);
    CHECK(check_axioms(f.p->structure()).ok());
  }

  auto d = pg_dinf().structure().data();
  FiniteStructure cut(toggle_m(d, {"a", "a", "1"}));
  auto r = check_axioms(cut);
  CHECK_FALSE(r.axioms[4].holds);
  CHECK(r.axioms[4].witness == std::vector<Elem>{cut.element("a")});
  CHECK_THROWS_AS(Pregroup{cut}, PregroupError);

  // D(a,b) with no product
  auto e = d;
  e.relations["D"].push_back({"a", "b"});
  auto r2 = check_axioms(FiniteStructure(e));
  CHECK_FALSE(r2.axioms[1].holds);
}

TEST_CASE("axiom checks agree with the parsed axiom sentences") {
  for (auto& f : all_pregroups()) CHECK(evaluate_axiom_sentences(f.p->structure()) == check_axioms(f.p->structure()).verdicts());
  // every single-tuple toggle of M in PG_Dinf
  auto d = pg_dinf().structure().data();
  const auto& c = d.carrier;
  std::size_t failing = 0;
  for (auto& x : c)
    for (auto& y : c)
      for (auto& z : c) {
        FiniteStructure m(toggle_m(d, {x, y, z}));
        auto v = check_axioms(m).verdicts();
        CHECK(evaluate_axiom_sentences(m) == v);
        failing += !check_axioms(m).ok();
      }
  CHECK(failing == 27);  // any single change breaks PG_Dinf
}

TEST_CASE("product") {
  const auto& p = pg_dinf();
  Elem one = p.identity(), a = p.element("a"), b = p.element("b");
  CHECK(p.product(a, a) == one);
  CHECK_FALSE(p.product(a, b).has_value());
  for (auto& f : all_pregroups()) {
    const Pregroup& q = *f.p;
    for (Elem x = 0; x < q.size(); ++x) {
      CHECK(q.product(x, q.identity()) == x);
      CHECK(q.product(*q.product(x, q.identity()), q.identity()) == x);
      CHECK(q.product(x, q.inv(x)) == q.identity());
    }
    for (auto& t : q.structure().relation("M").tuples())
      CHECK(q.structure().relation("M").contains(q.inv(t[1]), q.inv(t[0]), q.inv(t[2])));
  }
}

TEST_CASE("lemma_abc_check") {
  const auto& z = z3_pregroup();
  const auto& m = z.structure().relation("M");
  Elem e0 = z.element("0"), e1 = z.element("1"), e2 = z.element("2");
  REQUIRE(m.contains(e1, e2, e0));
  CHECK(m.contains(e0, e1, e1));
  CHECK(m.contains(e2, e1, e0));
  for (auto& f : all_pregroups()) CHECK(lemma_abc_check(*f.p).empty());
}

TEST_CASE("is_subpregroup") {
  const auto& p = pg_dinf();
  std::vector<Elem> q1{p.identity(), p.element("a")};
  auto q = induced_substructure(p, q1);
  CHECK(is_subpregroup(q, p).ok);
  CHECK(is_subpregroup(p.structure(), p).ok);

  auto data = q.data();
  auto& dr = data.relations["D"];
  dr.erase(std::find(dr.begin(), dr.end(), std::vector<std::string>{"a", "a"}));
  auto& mr = data.relations["M"];
  mr.erase(std::find(mr.begin(), mr.end(), std::vector<std::string>{"a", "a", "1"}));
  CHECK_FALSE(is_subpregroup(FiniteStructure(data), p).ok);

  std::vector<Elem> no_one{p.element("a")};
  CHECK_THROWS_AS(induced_substructure(p, no_one), Error);
}

TEST_CASE("attach_constants") {
  const auto& d = pg_dinf();
  auto s = attach_constants(d, {{"K", {d.identity()}}});
  CHECK(s.delta() == std::vector<Elem>{d.identity()});
  CHECK(s.structure().constant("K_0") == d.identity());

  const auto& am = pg_am();
  auto c = attach_constants(am, {{"C", {am.identity(), am.element("c")}}});
  CHECK(c.delta() == std::vector<Elem>{am.identity(), am.element("c")});
  CHECK(c.structure().constant("C_1") == am.element("c"));
  for (auto& lit : c.diagram()) CHECK(eval(c.structure(), lit));

  CHECK_THROWS_AS(attach_constants(d, {{"K", {d.element("a")}}}), Error);
  CHECK_THROWS_AS(attach_constants(d, {{"K", {d.identity()}}, {"K", {d.identity()}}}), Error);
}

TEST_CASE("pregroup documents") {
  auto doc = to_document(am().spregroup());
  auto back = spregroup_from_document(parse_structure_document(format_structure_document(doc)));
  CHECK(back.structure().carrier() == am().spregroup().structure().carrier());
  CHECK(back.family().size() == 1);

  auto bad = to_document(SPregroup(pg_dinf()));
  bad.data = toggle_m(bad.data, {"a", "a", "1"});
  CHECK_THROWS_AS(spregroup_from_document(bad), PregroupError);
}
