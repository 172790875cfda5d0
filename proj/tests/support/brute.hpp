#pragma once

// Brute-force references used as test oracles.  They read the pregroup
// tables directly and share no code with the word algorithms under test.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "stallings/pregroup.hpp"

namespace brute {

using stallings::Elem;
using stallings::kNoElem;
using stallings::Pregroup;
using Word = std::vector<Elem>;

inline Elem mul(const Pregroup& p, Elem x, Elem y) {
  // straight from the M relation
  const auto& m = p.structure().relation("M");
  for (Elem z = 0; z < p.size(); ++z)
    if (m.contains(x, y, z)) return z;
  return kNoElem;
}

inline Elem inv(const Pregroup& p, Elem x) { return p.structure().function("inv")(x); }

inline bool reduced(const Pregroup& p, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (mul(p, w[i], w[i + 1]) != kNoElem) return false;
  return true;
}

// Merges the rightmost mergeable pair until none is left.
inline Word reduce_rightmost(const Pregroup& p, Word w) {
  if (w.empty()) return {p.identity()};
  for (;;) {
    bool merged = false;
    for (std::size_t i = w.size() - 1; i-- > 0;) {
      Elem z = mul(p, w[i], w[i + 1]);
      if (z != kNoElem) {
        w[i] = z;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        merged = true;
        break;
      }
    }
    if (!merged) return w;
  }
}

// c * a computed from the definition; nullopt when some product is undefined.
inline std::optional<Word> interleave(const Pregroup& p, const Word& c, const Word& a) {
  std::size_t k = c.size();
  Word d(k);
  for (std::size_t i = 0; i < k; ++i) {
    Elem x = c[i];
    if (i > 0) {
      x = mul(p, inv(p, a[i - 1]), x);
      if (x == kNoElem) return std::nullopt;
    }
    if (i + 1 < k) {
      x = mul(p, x, a[i]);
      if (x == kNoElem) return std::nullopt;
    }
    d[i] = x;
  }
  return d;
}

// Every interleaving of c, by exhaustive choice of the k-1 interleavers.
inline void for_each_interleaving(const Pregroup& p, const Word& c, const std::function<void(const Word&)>& visit) {
  std::size_t k = c.size();
  if (k == 0) return;
  Word a(k - 1, 0);
  for (;;) {
    if (auto d = interleave(p, c, a)) visit(*d);
    std::size_t i = a.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++a[i] < p.size()) break;
      a[i] = 0;
    }
  }
}

// c ~ d iff d = c * a for some interleaver a (reduced inputs).
inline bool equivalent(const Pregroup& p, const Word& c, const Word& d) {
  if (c.size() != d.size()) return false;
  bool found = false;
  for_each_interleaving(p, c, [&](const Word& e) { found = found || e == d; });
  return found;
}

inline std::vector<Word> all_words(std::size_t carrier, std::size_t length) {
  std::vector<Word> out;
  Word w(length, 0);
  for (;;) {
    out.push_back(w);
    std::size_t i = length;
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++w[i] < carrier) break;
      w[i] = 0;
    }
  }
}

inline std::vector<Word> reduced_words(const Pregroup& p, std::size_t min_len, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t n = min_len; n <= max_len; ++n)
    for (auto& w : all_words(p.size(), n))
      if (reduced(p, w)) out.push_back(w);
  return out;
}

}  // namespace brute
