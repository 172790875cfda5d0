#include "stallings/ugroup.hpp"

#include <algorithm>

#include "stallings/io.hpp"

namespace stallings {

Word parse_word(const Pregroup& p, std::string_view text) {
  Word w;
  for (const auto& id : split_ids(text)) w.push_back(p.element(id));
  return w;
}

std::string format_word(const Pregroup& p, const Word& w) {
  std::vector<std::string> ids;
  for (Elem e : w) ids.push_back(p.id(e));
  return join_ids(ids);
}

namespace {

void check_letters(const Pregroup& p, const Word& w) {
  for (Elem e : w)
    if (e >= p.size()) throw Error("word letter outside the carrier");
}

}  // namespace

Word reduce(const Pregroup& p, const Word& w) {
  check_letters(p, w);
  Word out = w;
  std::size_t i = 0;
  while (out.size() > 1 && i + 1 < out.size()) {
    Elem z = p.mul(out[i], out[i + 1]);
    if (z == kNoElem) {
      ++i;
      continue;
    }
    out[i] = z;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    // everything left of i - 1 was already irreducible
    if (i > 0) --i;
  }
  if (out.empty()) out.push_back(p.identity());
  return out;
}

bool is_reduced(const Pregroup& p, const Word& w) {
  check_letters(p, w);
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (p.in_domain(w[i], w[i + 1])) return false;
  return true;
}

std::optional<Word> interleave(const Pregroup& p, const Word& c, const Word& a) {
  check_letters(p, c);
  check_letters(p, a);
  if (c.empty()) throw Error("interleave: empty word");
  if (a.size() + 1 != c.size())
    throw Error("interleave: interleaver has length " + std::to_string(a.size()) + ", expected " +
                std::to_string(c.size() - 1));
  Word d(c.size());
  Elem prev = p.identity();  // a_{i-1}^-1, with a_0 = 1
  for (std::size_t i = 0; i < c.size(); ++i) {
    Elem v = p.mul(prev, c[i]);
    if (v == kNoElem) return std::nullopt;
    if (i + 1 < c.size()) {
      v = p.mul(v, a[i]);
      if (v == kNoElem) return std::nullopt;
      prev = p.inv(a[i]);
    }
    d[i] = v;
  }
  return d;
}

bool equivalent(const Pregroup& p, const Word& c, const Word& d) {
  Word rc = reduce(p, c);
  Word rd = reduce(p, d);
  if (rc.size() != rd.size()) return false;
  Elem pi = p.identity();
  for (std::size_t r = 0; r < rc.size(); ++r) {
    Elem q = p.mul(pi, rc[r]);
    if (q == kNoElem) return false;
    pi = p.mul(p.inv(rd[r]), q);
    if (pi == kNoElem) return false;
  }
  return pi == p.identity();
}

namespace {

// Depth-first search over interleavers keeping the lex-least result.
class LeastInterleaving {
 public:
  LeastInterleaving(const Pregroup& p, const Word& c) : p_(p), c_(c), best_(c), cur_(c.size()) {}

  Word run() {
    visit(0, p_.identity());
    return best_;
  }

 private:
  bool prefix_worse(std::size_t i) const {
    return std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                        cur_.begin(), cur_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }

  void visit(std::size_t i, Elem prev) {
    Elem v = p_.mul(prev, c_[i]);
    if (v == kNoElem) return;
    if (i + 1 == c_.size()) {
      cur_[i] = v;
      if (cur_ < best_) best_ = cur_;
      return;
    }
    for (Elem a = 0; a < p_.size(); ++a) {
      Elem d = p_.mul(v, a);
      if (d == kNoElem) continue;
      cur_[i] = d;
      if (prefix_worse(i)) continue;
      visit(i + 1, p_.inv(a));
    }
  }

  const Pregroup& p_;
  const Word& c_;
  Word best_;
  Word cur_;
};

}  // namespace

UElement canonical(const Pregroup& p, const Word& w) {
  Word r = reduce(p, w);
  if (r.size() > kMaxCanonicalLength)
    throw Error("canonical: reduced word has length " + std::to_string(r.size()) + "; the limit is " +
                std::to_string(kMaxCanonicalLength));
  if (r.size() == 1) return UElement(p, std::move(r));
  return UElement(p, LeastInterleaving(p, r).run());
}

UElement u_identity(const Pregroup& p) { return UElement(p, Word{p.identity()}); }

UElement u_mul(const UElement& u, const UElement& v) {
  if (&u.pregroup() != &v.pregroup()) throw Error("u_mul: elements of different pregroups");
  Word w = u.word();
  w.insert(w.end(), v.word().begin(), v.word().end());
  return canonical(u.pregroup(), w);
}

UElement u_inv(const UElement& u) {
  const auto& p = u.pregroup();
  Word w;
  for (auto it = u.word().rbegin(); it != u.word().rend(); ++it) w.push_back(p.inv(*it));
  return canonical(p, w);
}

UElement embed(const Pregroup& p, Elem g) {
  if (g >= p.size()) throw Error("embed: element outside the carrier");
  return UElement(p, Word{g});
}

Agreement subgroup_agreement(const Pregroup& q, const Pregroup& p, const Word& c, const Word& d) {
  auto check = is_subpregroup(q.structure(), p);
  if (!check.ok) throw Error("not a subpregroup: " + check.reason);
  auto lift = [&](const Word& w) {
    check_letters(q, w);
    Word out;
    for (Elem e : w) out.push_back(p.element(q.id(e)));
    return out;
  };
  return {equivalent(q, c, d), equivalent(p, lift(c), lift(d))};
}

}  // namespace stallings
