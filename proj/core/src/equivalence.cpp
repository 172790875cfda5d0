#include "stallings/equivalence.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "json.hpp"

namespace stallings {

using nlohmann::ordered_json;

ClosureChain product_closure(const Pregroup& p, std::span<const Elem> s0, std::size_t steps) {
  std::vector<char> in(p.size(), 0);
  for (Elem x : s0) {
    if (x >= p.size()) throw Error("product_closure: element outside the carrier");
    in[x] = 1;
  }
  auto snapshot = [&] {
    std::vector<Elem> s;
    for (Elem x = 0; x < p.size(); ++x)
      if (in[x]) s.push_back(x);
    return s;
  };
  ClosureChain out;
  out.steps.push_back(snapshot());
  for (std::size_t r = 0; r < steps; ++r) {
    const auto& cur = out.steps.back();
    for (Elem a : cur)
      for (Elem b : cur) {
        Elem z = p.mul(a, b);
        if (z != kNoElem) in[z] = 1;
      }
    auto next = snapshot();
    if (!out.stabilized && next == cur) {
      out.stabilized = true;
      out.stable_from = r;
    }
    out.steps.push_back(std::move(next));
  }
  return out;
}

namespace {

std::optional<Word> map_word(const PartialMap& phi, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Elem e : w) {
    auto v = phi(e);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

void fail(Verdict& v, std::string detail) {
  if (v.detail.empty()) v.detail = std::move(detail);
  v.passed = false;
}

// Reduced words of the given length over `letters`, or nothing if there
// would be more than `cap` candidates.
std::optional<std::vector<Word>> reduced_words(const Pregroup& p, const std::vector<Elem>& letters, std::size_t len,
                                               std::size_t cap) {
  double count = 1;
  for (std::size_t i = 0; i < len; ++i) count *= static_cast<double>(letters.size());
  if (count > static_cast<double>(cap)) return std::nullopt;
  std::vector<Word> out;
  Word w;
  auto rec = [&](auto&& self) -> void {
    if (w.size() == len) {
      out.push_back(w);
      return;
    }
    for (Elem x : letters) {
      if (!w.empty() && p.in_domain(w.back(), x)) continue;
      w.push_back(x);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  return out;
}

constexpr std::size_t kTransportWordCap = 4096;

}  // namespace

TransferReport transfer(const SPregroup& p1, const SPregroup& p2, const std::vector<Word>& f) {
  if (f.empty()) throw Error("transfer: no words given");
  if (!(p1.structure().signature() == p2.structure().signature()))
    throw Error("transfer: the two pregroups have different signatures");
  const Pregroup& P1 = p1.pregroup();
  const Pregroup& P2 = p2.pregroup();

  TransferReport r;
  for (const auto& w : f) {
    r.source.push_back(canonical(P1, w).word());
    r.J = std::max(r.J, r.source.back().size());
  }
  std::set<Elem> letters;
  // Inverses are added: the quotient test of word equivalence multiplies by
  // inverted letters, and those products must lie inside S for phi to see them.
  for (const auto& w : r.source)
    for (Elem x : w) {
      letters.insert(x);
      letters.insert(P1.inv(x));
    }
  std::vector<Elem> s0(letters.begin(), letters.end());
  r.chain = product_closure(P1, s0, 2 * r.J);
  const auto& S = r.chain.steps.back();
  r.phi = find_isomorphism(S, p1.structure(), p2.structure());
  if (!r.phi) {
    const std::string why = "no isomorphism of S_" + std::to_string(2 * r.J) + " into the second pregroup";
    for (Verdict* v : {&r.chain_equality, &r.reducedness, &r.transport, &r.homomorphism}) v->detail = why;
    return r;
  }
  const PartialMap& phi = *r.phi;
  for (const auto& w : r.source) {
    r.mapped.push_back(*map_word(phi, w));
    r.images.push_back(canonical(P2, r.mapped.back()).word());
  }

  // chain equality
  r.chain_equality.passed = true;
  {
    Word t0 = *map_word(phi, s0);
    std::sort(t0.begin(), t0.end());
    r.target_chain = product_closure(P2, t0, 2 * r.J);
    for (std::size_t i = 0; i < r.chain.steps.size(); ++i) {
      Word img = *map_word(phi, r.chain.steps[i]);
      std::sort(img.begin(), img.end());
      ++r.chain_equality.checked;
      if (img != r.target_chain.steps[i]) fail(r.chain_equality, "phi(S_" + std::to_string(i) + ") != T_" + std::to_string(i));
    }
  }

  // reducedness: (x, y) in D1 iff (phi x, phi y) in D2 on S
  r.reducedness.passed = true;
  for (Elem x : S)
    for (Elem y : S) {
      ++r.reducedness.checked;
      if (P1.in_domain(x, y) != P2.in_domain(*phi(x), *phi(y)))
        fail(r.reducedness, "D differs at (" + P1.id(x) + "," + P1.id(y) + ")");
    }
  for (std::size_t i = 0; i < r.source.size(); ++i) {
    ++r.reducedness.checked;
    if (is_reduced(P1, r.source[i]) && !is_reduced(P2, r.mapped[i]))
      fail(r.reducedness, "theta(" + format_word(P1, r.source[i]) + ") is not reduced");
  }

  // transport over all reduced words on S_0 up to length J
  r.transport.passed = true;
  for (std::size_t len = 1; len <= r.J; ++len) {
    auto words = reduced_words(P1, s0, len, kTransportWordCap);
    if (!words) {
      ++r.transport.skipped;
      continue;
    }
    std::vector<Word> images;
    for (const auto& w : *words) images.push_back(*map_word(phi, w));
    for (std::size_t i = 0; i < words->size(); ++i)
      for (std::size_t j = i; j < words->size(); ++j) {
        ++r.transport.checked;
        if (equivalent(P1, (*words)[i], (*words)[j]) != equivalent(P2, images[i], images[j]))
          fail(r.transport, "(" + format_word(P1, (*words)[i]) + ") vs (" + format_word(P1, (*words)[j]) + ")");
      }
  }

  // homomorphism on products of length <= J, inverses, injectivity
  r.homomorphism.passed = true;
  for (std::size_t i = 0; i < r.source.size(); ++i) {
    for (std::size_t j = 0; j < r.source.size(); ++j) {
      Word prod = reduce(P1, concat(r.source[i], r.source[j]));
      auto mapped = map_word(phi, prod);
      if (prod.size() > r.J || !mapped) {
        ++r.homomorphism.skipped;
        continue;
      }
      ++r.homomorphism.checked;
      if (canonical(P2, concat(r.mapped[i], r.mapped[j])) != canonical(P2, *mapped))
        fail(r.homomorphism, "product of (" + format_word(P1, r.source[i]) + ") and (" + format_word(P1, r.source[j]) + ")");
    }
    Word inv;
    for (auto it = r.source[i].rbegin(); it != r.source[i].rend(); ++it) inv.push_back(P1.inv(*it));
    auto mapped_inv = map_word(phi, inv);
    if (!mapped_inv) {
      ++r.homomorphism.skipped;
    } else {
      ++r.homomorphism.checked;
      if (canonical(P2, *mapped_inv) != u_inv(canonical(P2, r.mapped[i])))
        fail(r.homomorphism, "inverse of (" + format_word(P1, r.source[i]) + ")");
    }
    for (std::size_t j = i + 1; j < r.source.size(); ++j) {
      ++r.homomorphism.checked;
      if ((r.source[i] == r.source[j]) != (r.images[i] == r.images[j]))
        fail(r.homomorphism, "classes of (" + format_word(P1, r.source[i]) + ") and (" +
                                 format_word(P1, r.source[j]) + ") collide or split");
    }
  }
  return r;
}

namespace {

ordered_json ids_json(const Pregroup& p, const std::vector<Elem>& s) {
  ordered_json a = ordered_json::array();
  for (Elem e : s) a.push_back(p.id(e));
  return a;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["passed"] = v.passed;
  j["checked"] = v.checked;
  j["skipped"] = v.skipped;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

}  // namespace

std::string format_transfer_report(const TransferReport& r, const SPregroup& p1, const SPregroup& p2) {
  const Pregroup& P1 = p1.pregroup();
  const Pregroup& P2 = p2.pregroup();
  ordered_json j;
  j["verdict"] = r.ok() ? "pass" : "fail";
  j["J"] = r.J;
  ordered_json src = ordered_json::array();
  for (const auto& w : r.source) src.push_back(format_word(P1, w));
  j["source"] = src;
  ordered_json chain = ordered_json::array();
  for (const auto& s : r.chain.steps) chain.push_back(ids_json(P1, s));
  j["chain"] = chain;
  j["stabilized"] = r.chain.stabilized;
  if (r.chain.stabilized) j["stable_from"] = r.chain.stable_from;
  if (r.phi) {
    ordered_json phi = ordered_json::object();
    for (std::size_t i = 0; i < r.phi->domain.size(); ++i) phi[P1.id(r.phi->domain[i])] = P2.id(r.phi->image[i]);
    j["phi"] = phi;
    ordered_json images = ordered_json::array();
    for (const auto& w : r.images) images.push_back(format_word(P2, w));
    j["images"] = images;
  } else {
    j["phi"] = nullptr;
  }
  ordered_json checks;
  checks["chain_equality"] = verdict_json(r.chain_equality);
  checks["reducedness"] = verdict_json(r.reducedness);
  checks["transport"] = verdict_json(r.transport);
  checks["homomorphism"] = verdict_json(r.homomorphism);
  j["checks"] = checks;
  j["note"] =
      "finite pregroups that are existentially equivalent are isomorphic; this report exercises the "
      "construction on the given words";
  return j.dump(2) + "\n";
}

namespace {

struct Side {
  const Construction& c;
  std::vector<FiniteStructure> components;
  std::map<std::tuple<int, std::size_t, int, int>, Elem> raw_class;
};

Side make_side(const Construction& c) {
  Side s{c, {}, {}};
  switch (c.kind) {
    case ConstructionKind::free:
      s.components.push_back(group_structure(c.groups[0]));
      s.components.push_back(group_structure(c.groups[1]));
      break;
    case ConstructionKind::amalgam:
      s.components.push_back(group_structure(c.groups[0], "1", {{"C", c.c_in_a}}));
      s.components.push_back(group_structure(c.groups[1], "1", {{"C", c.c_in_b}}));
      break;
    case ConstructionKind::hnn:
      s.components.push_back(group_structure(c.groups[0], "1", {{"C1", c.c1}, {"C2", c.c2}}));
      break;
  }
  for (Elem e = 0; e < c.classes.size(); ++e)
    for (const auto& r : c.classes[e]) s.raw_class[{r.factor, r.g, r.e0, r.e1}] = e;
  return s;
}

// Which component and which block a raw element belongs to.
int part_of(const Construction& c, const RawLetter& r) {
  return c.kind == ConstructionKind::hnn ? r.e0 + 2 * r.e1 : r.factor;
}

int component_of(const Construction& c, int part) { return c.kind == ConstructionKind::hnn ? 0 : part; }

}  // namespace

HarnessReport application_harness(const Construction& side1, const Construction& side2, const HarnessOptions& opt) {
  if (side1.kind != side2.kind) throw Error("application_harness: constructions of different kinds");
  HarnessReport rep;
  rep.kind = side1.kind;
  Side a = make_side(side1);
  Side b = make_side(side2);
  auto note = [&](std::string msg) {
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(msg));
  };

  rep.hypothesis = true;
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    const auto& m = a.components[k];
    const auto& n = b.components[k];
    if (!(m.signature() == n.signature())) {
      rep.hypothesis = false;
      rep.hypothesis_detail = "component " + std::to_string(k) + ": designated subgroups differ in size";
      break;
    }
    auto size = std::min({opt.hypothesis_size, m.size(), n.size()});
    auto eq = bounded_f_equiv(m, n, size);
    if (!eq.equivalent) {
      rep.hypothesis = false;
      rep.hypothesis_detail = "component " + std::to_string(k) + ": subset of size " +
                              std::to_string(eq.witness.size()) + " has no partner";
      break;
    }
  }
  if (rep.hypothesis_detail.empty())
    rep.hypothesis_detail = "components agree on subsets of size <= " + std::to_string(opt.hypothesis_size);
  if (!rep.hypothesis) return rep;

  const SPregroup& p1 = side1.spregroup();
  const SPregroup& p2 = side2.spregroup();
  const Pregroup& P1 = p1.pregroup();
  std::mt19937_64 rng(opt.seed);
  const std::size_t parts = side1.kind == ConstructionKind::hnn ? 4 : 2;

  for (std::size_t size = 1; size <= std::min(opt.subset_size, P1.size()); ++size) {
    for (const auto& subset : subsets_of_size(P1.size(), size)) {
      ++rep.subsets;
      std::string where = "subset {" + format_word(P1, subset) + "}";
      // split the raw elements of the subset into parts
      std::vector<std::vector<Elem>> t(parts);
      for (Elem x : subset)
        for (const auto& r : side1.classes[x]) t[static_cast<std::size_t>(part_of(side1, r))].push_back(static_cast<Elem>(r.g));
      std::vector<std::optional<PartialMap>> partner(parts);
      bool found = true;
      for (std::size_t i = 0; i < parts; ++i) {
        std::sort(t[i].begin(), t[i].end());
        t[i].erase(std::unique(t[i].begin(), t[i].end()), t[i].end());
        int comp = component_of(side1, static_cast<int>(i));
        partner[i] = find_isomorphism(t[i], a.components[comp], b.components[comp]);
        if (!partner[i]) {
          note(where + ": part " + std::to_string(i) + " has no partner");
          found = false;
        }
      }
      if (!found) continue;
      // reassemble in P2
      PartialMap psi;
      bool consistent = true;
      for (Elem x : subset) {
        Elem img = kNoElem;
        for (const auto& r : side1.classes[x]) {
          auto i = static_cast<std::size_t>(part_of(side1, r));
          Elem g2 = *(*partner[i])(static_cast<Elem>(r.g));
          auto it = b.raw_class.find({r.factor, g2, r.e0, r.e1});
          if (it == b.raw_class.end() || (img != kNoElem && img != it->second)) {
            consistent = false;
            break;
          }
          img = it->second;
        }
        if (!consistent) break;
        psi.domain.push_back(x);
        psi.image.push_back(img);
      }
      if (!consistent || !psi.injective() || !is_isomorphism(psi, p1.structure(), p2.structure())) {
        note(where + ": componentwise partners do not reassemble into an isomorphism");
        continue;
      }
      ++rep.partners;

      std::uniform_int_distribution<std::size_t> pick(0, subset.size() - 1);
      std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, opt.max_word_length));
      for (std::size_t s = 0; s < opt.word_sets; ++s) {
        std::vector<Word> words(opt.words_per_set);
        for (auto& w : words) {
          w.resize(len(rng));
          for (auto& l : w) l = subset[pick(rng)];
        }
        auto tr = transfer(p1, p2, words);
        ++rep.transfers;
        if (!tr.ok()) {
          note(where + ": transfer failed on words " + [&] {
            std::string s2;
            for (const auto& w : words) s2 += (s2.empty() ? "" : ";") + format_word(P1, w);
            return s2;
          }());
          continue;
        }
        bool oracle_ok = true;
        for (std::size_t i = 0; i < tr.source.size(); ++i)
          for (std::size_t j = i + 1; j < tr.source.size(); ++j) {
            ++rep.oracle_checks;
            bool same1 = oracle_normal_form(side1, tr.source[i]) == oracle_normal_form(side1, tr.source[j]);
            bool same2 = oracle_normal_form(side2, tr.mapped[i]) == oracle_normal_form(side2, tr.mapped[j]);
            if (same1 != same2) oracle_ok = false;
          }
        if (!oracle_ok) {
          note(where + ": normal-form oracle disagrees with the transferred classes");
          continue;
        }
        ++rep.transfers_passed;
      }
    }
  }
  return rep;
}

std::string format_harness_report(const HarnessReport& r) {
  ordered_json j;
  j["verdict"] = r.ok() ? "pass" : "fail";
  j["kind"] = std::string(to_string(r.kind));
  j["hypothesis"] = r.hypothesis;
  j["hypothesis_detail"] = r.hypothesis_detail;
  j["subsets"] = r.subsets;
  j["partners"] = r.partners;
  j["transfers"] = r.transfers;
  j["transfers_passed"] = r.transfers_passed;
  j["oracle_checks"] = r.oracle_checks;
  j["failures"] = r.failures;
  return j.dump(2) + "\n";
}

}  // namespace stallings
