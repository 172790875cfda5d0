#include "stallings/morphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace stallings {

std::optional<Elem> PartialMap::operator()(Elem x) const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == x) return image[i];
  return std::nullopt;
}

bool PartialMap::injective() const {
  std::vector<Elem> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

PartialMap PartialMap::inverse() const {
  if (!injective()) throw Error("inverse of a non-injective map");
  std::vector<std::size_t> order(domain.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return image[a] < image[b]; });
  PartialMap inv;
  for (auto i : order) {
    inv.domain.push_back(image[i]);
    inv.image.push_back(domain[i]);
  }
  return inv;
}

PartialMap PartialMap::identity(std::span<const Elem> subset) {
  PartialMap id;
  id.domain.assign(subset.begin(), subset.end());
  std::sort(id.domain.begin(), id.domain.end());
  id.domain.erase(std::unique(id.domain.begin(), id.domain.end()), id.domain.end());
  id.image = id.domain;
  return id;
}

namespace {

std::string tuple_text(const FiniteStructure& m, std::span<const Elem> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += m.id(t[i]);
  }
  return out + ")";
}

}  // namespace

MorphismCheck is_morphism(const PartialMap& phi, const FiniteStructure& source,
                          const FiniteStructure& target) {
  if (phi.domain.size() != phi.image.size()) throw Error("partial map has mismatched domain and image");
  for (Elem s : phi.domain)
    if (s >= source.size()) throw Error("map domain element outside the source carrier");
  for (Elem t : phi.image)
    if (t >= target.size()) throw Error("map image element outside the target carrier");

  std::vector<Elem> img(source.size(), kNoElem);
  for (std::size_t i = 0; i < phi.domain.size(); ++i) img[phi.domain[i]] = phi.image[i];

  MorphismCheck check;
  using Cond = MorphismViolation::Condition;

  for (Elem s : phi.domain) {
    for (const auto& c : source.constants_at(s)) {
      const auto& tc = target.constants_at(img[s]);
      if (!std::binary_search(tc.begin(), tc.end(), c)) {
        check.violations.push_back({Cond::constant, c, {s},
                                    source.id(s) + " interprets " + c + " but its image " +
                                        target.id(img[s]) + " does not"});
      }
    }
  }

  std::vector<Elem> dom = phi.domain;
  std::sort(dom.begin(), dom.end());
  for (const auto& f : source.functions()) {
    const auto& tf = target.function(f.name());
    for_each_tuple(dom, f.arity(), [&](std::span<const Elem> args) {
      Elem v = f(args);
      if (img[v] == kNoElem) return true;
      std::vector<Elem> mapped;
      for (Elem a : args) mapped.push_back(img[a]);
      if (tf(mapped) != img[v]) {
        check.violations.push_back({Cond::function, f.name(), {args.begin(), args.end()},
                                    f.name() + tuple_text(source, args) + " = " + source.id(v) +
                                        " is not preserved"});
      }
      return true;
    });
  }

  for (const auto& r : source.relations()) {
    const auto& tr = target.relation(r.name());
    for (const auto& tup : r.tuples()) {
      if (!std::all_of(tup.begin(), tup.end(), [&](Elem x) { return img[x] != kNoElem; })) continue;
      std::vector<Elem> mapped;
      for (Elem a : tup) mapped.push_back(img[a]);
      if (!tr.contains(mapped)) {
        check.violations.push_back({Cond::relation, r.name(), tup,
                                    tuple_text(source, tup) + " in " + r.name() + " but " +
                                        tuple_text(target, mapped) + " is not"});
      }
    }
  }
  return check;
}

bool is_isomorphism(const PartialMap& phi, const FiniteStructure& source,
                    const FiniteStructure& target) {
  if (!phi.injective()) return false;
  return is_morphism(phi, source, target).ok() && is_morphism(phi.inverse(), target, source).ok();
}

namespace {

class IsoSearch {
 public:
  IsoSearch(std::span<const Elem> subset, const FiniteStructure& source,
            const FiniteStructure& target, std::optional<std::vector<Elem>> allowed)
      : src_(source), dst_(target) {
    if (!(source.signature() == target.signature()))
      throw Error("isomorphism search between structures of different signatures");
    dom_.assign(subset.begin(), subset.end());
    std::sort(dom_.begin(), dom_.end());
    dom_.erase(std::unique(dom_.begin(), dom_.end()), dom_.end());
    for (Elem s : dom_)
      if (s >= source.size()) throw Error("subset element outside the source carrier");
    pos_.assign(source.size(), -1);
    for (std::size_t i = 0; i < dom_.size(); ++i) pos_[dom_[i]] = static_cast<int>(i);
    if (allowed) {
      candidates_ = *allowed;
      std::sort(candidates_.begin(), candidates_.end());
      candidates_.erase(std::unique(candidates_.begin(), candidates_.end()), candidates_.end());
    } else {
      candidates_.resize(target.size());
      std::iota(candidates_.begin(), candidates_.end(), 0);
    }
    used_.assign(target.size(), 0);
    for (const auto& f : source.functions()) tfuncs_.push_back(&target.function(f.name()));
    for (const auto& r : source.relations()) trels_.push_back(&target.relation(r.name()));
  }

  std::optional<PartialMap> run() {
    img_.clear();
    if (dom_.size() > candidates_.size()) return std::nullopt;
    if (!extend()) return std::nullopt;
    return PartialMap{dom_, img_};
  }

 private:
  bool extend() {
    std::size_t k = img_.size();
    if (k == dom_.size()) return true;
    for (Elem t : candidates_) {
      if (used_[t]) continue;
      if (src_.constants_at(dom_[k]) != dst_.constants_at(t)) continue;
      img_.push_back(t);
      used_[t] = 1;
      if (consistent(k) && extend()) return true;
      used_[t] = 0;
      img_.pop_back();
    }
    return false;
  }

  // Checks every constraint whose tuple lies within the assigned prefix.
  bool consistent(std::size_t k) {
    std::span<const Elem> prefix(dom_.data(), k + 1);
    std::vector<Elem> mapped;
    const auto& fs = src_.functions();
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
      const auto& f = fs[fi];
      const auto& tf = *tfuncs_[fi];
      bool ok = for_each_tuple(prefix, f.arity(), [&](std::span<const Elem> args) {
        Elem v = f(args);
        mapped.clear();
        for (Elem a : args) mapped.push_back(img_[static_cast<std::size_t>(pos_[a])]);
        Elem w = tf(mapped);
        int p = pos_[v];
        if (p >= 0 && static_cast<std::size_t>(p) <= k) return w == img_[static_cast<std::size_t>(p)];
        // v unassigned or outside the subset: w must not be a current image
        return !used_[w];
      });
      if (!ok) return false;
    }
    const auto& rs = src_.relations();
    for (std::size_t ri = 0; ri < rs.size(); ++ri) {
      const auto& r = rs[ri];
      const auto& tr = *trels_[ri];
      bool ok = for_each_tuple(prefix, r.arity(), [&](std::span<const Elem> tup) {
        bool touches = std::find(tup.begin(), tup.end(), dom_[k]) != tup.end();
        if (!touches) return true;
        mapped.clear();
        for (Elem a : tup) mapped.push_back(img_[static_cast<std::size_t>(pos_[a])]);
        return r.contains(tup) == tr.contains(mapped);
      });
      if (!ok) return false;
    }
    return true;
  }

  const FiniteStructure& src_;
  const FiniteStructure& dst_;
  std::vector<Elem> dom_;
  std::vector<int> pos_;
  std::vector<Elem> candidates_;
  std::vector<std::uint8_t> used_;
  std::vector<Elem> img_;
  std::vector<const FunctionTable*> tfuncs_;
  std::vector<const RelationTable*> trels_;
};

}  // namespace

std::optional<PartialMap> find_isomorphism(std::span<const Elem> subset,
                                           const FiniteStructure& source,
                                           const FiniteStructure& target) {
  return IsoSearch(subset, source, target, std::nullopt).run();
}

std::optional<PartialMap> find_isomorphism_into(std::span<const Elem> subset,
                                                const FiniteStructure& source,
                                                const FiniteStructure& target,
                                                std::span<const Elem> allowed) {
  return IsoSearch(subset, source, target, std::vector<Elem>(allowed.begin(), allowed.end())).run();
}

ClosureChain generated_closure(std::span<const Elem> seed, const FiniteStructure& m,
                               std::size_t depth) {
  ClosureChain chain;
  std::vector<std::uint8_t> in(m.size(), 0);
  for (Elem s : seed) {
    if (s >= m.size()) throw Error("closure seed outside the carrier");
    in[s] = 1;
  }
  auto collect = [&] {
    std::vector<Elem> out;
    for (Elem e = 0; e < m.size(); ++e)
      if (in[e]) out.push_back(e);
    return out;
  };
  chain.steps.push_back(collect());
  for (std::size_t i = 0; i < depth; ++i) {
    const auto current = chain.steps.back();
    for (const auto& f : m.functions()) {
      for_each_tuple(current, f.arity(), [&](std::span<const Elem> args) {
        in[f(args)] = 1;
        return true;
      });
    }
    chain.steps.push_back(collect());
    if (!chain.stabilized && chain.steps.back() == current) {
      chain.stabilized = true;
      chain.stable_from = i;
    }
  }
  return chain;
}

std::vector<std::vector<Elem>> subsets_of_size(std::size_t n, std::size_t size) {
  std::vector<std::vector<Elem>> out;
  if (size > n) return out;
  std::vector<Elem> cur(size);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = size;
    while (i > 0 && cur[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// Isomorphism-invariant summary of a subset: per element its constants and
// how often it occurs at each position of each relation / function tuple
// restricted to the subset, then sorted.
using Fingerprint = std::vector<std::vector<std::size_t>>;

Fingerprint fingerprint(const FiniteStructure& m, std::span<const Elem> s) {
  std::vector<int> pos(m.size(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
  Fingerprint fp(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) fp[i].push_back(m.constants_at(s[i]).size());
  for (const auto& r : m.relations()) {
    std::vector<std::vector<std::size_t>> counts(s.size(), std::vector<std::size_t>(r.arity(), 0));
    for (const auto& t : r.tuples()) {
      if (!std::all_of(t.begin(), t.end(), [&](Elem x) { return pos[x] >= 0; })) continue;
      for (std::size_t p = 0; p < t.size(); ++p) ++counts[static_cast<std::size_t>(pos[t[p]])][p];
    }
    for (std::size_t i = 0; i < s.size(); ++i) fp[i].insert(fp[i].end(), counts[i].begin(), counts[i].end());
  }
  for (const auto& f : m.functions()) {
    std::vector<std::size_t> inside(s.size(), 0);
    for_each_tuple(s, f.arity(), [&](std::span<const Elem> args) {
      if (pos[f(args)] >= 0) ++inside[static_cast<std::size_t>(pos[args[0]])];
      return true;
    });
    for (std::size_t i = 0; i < s.size(); ++i) fp[i].push_back(inside[i]);
  }
  std::sort(fp.begin(), fp.end());
  return fp;
}

struct OneWay {
  bool ok = true;
  std::vector<Elem> witness;
  std::size_t checked = 0;
  std::size_t searches = 0;
};

OneWay one_way(const FiniteStructure& m, const FiniteStructure& n, std::size_t max_size) {
  OneWay result;
  struct Entry {
    std::vector<Elem> rep;
    bool partner;
  };
  std::map<Fingerprint, std::vector<Entry>> cache;
  for (std::size_t size = 0; size <= max_size; ++size) {
    for (const auto& s : subsets_of_size(m.size(), size)) {
      ++result.checked;
      auto fp = fingerprint(m, s);
      auto& bucket = cache[fp];
      std::optional<bool> known;
      for (const auto& e : bucket) {
        if (find_isomorphism_into(s, m, m, e.rep)) {
          known = e.partner;
          break;
        }
      }
      if (!known) {
        ++result.searches;
        known = find_isomorphism(s, m, n).has_value();
        bucket.push_back({s, *known});
      }
      if (!*known) {
        result.ok = false;
        result.witness = s;
        return result;
      }
    }
  }
  return result;
}

}  // namespace

BoundedEquivalence bounded_f_equiv(const FiniteStructure& m, const FiniteStructure& n,
                                   std::size_t max_size) {
  if (max_size > std::min(m.size(), n.size()))
    throw Error("bounded_f_equiv: max_size exceeds the smaller carrier");
  BoundedEquivalence out;
  auto forward = one_way(m, n, max_size);
  out.subsets_checked = forward.checked;
  out.searches_run = forward.searches;
  if (!forward.ok) {
    out.equivalent = false;
    out.direction = BoundedEquivalence::Direction::first_into_second;
    out.witness = forward.witness;
    return out;
  }
  auto backward = one_way(n, m, max_size);
  out.subsets_checked += backward.checked;
  out.searches_run += backward.searches;
  if (!backward.ok) {
    out.equivalent = false;
    out.direction = BoundedEquivalence::Direction::second_into_first;
    out.witness = backward.witness;
  }
  return out;
}

}  // namespace stallings
