#pragma once

// Words over a pregroup, reduction, interleaving, the equivalence of
// reduced words and arithmetic in the universal group U(P).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stallings/pregroup.hpp"

namespace stallings {

using Word = std::vector<Elem>;

// Longest word canonical() accepts after reduction.
inline constexpr std::size_t kMaxCanonicalLength = 8;

// "a,b,a" -> letters; the empty string is the empty word.
Word parse_word(const Pregroup& p, std::string_view text);
std::string format_word(const Pregroup& p, const Word& w);

// Leftmost-first reduction.  The empty word reduces to (1); every other
// result has length >= 1 and no adjacent pair in D.
Word reduce(const Pregroup& p, const Word& w);
bool is_reduced(const Pregroup& p, const Word& w);

// c * a = (c1 a1, a1^-1 c2 a2, ..., a_{k-1}^-1 ck), or nullopt when a
// required product is undefined.  Throws Error unless |a| = |c| - 1.
std::optional<Word> interleave(const Pregroup& p, const Word& c, const Word& a);

// Reduces both words, then decides c ~ d by the running-quotient test.
bool equivalent(const Pregroup& p, const Word& c, const Word& d);

class UElement {
 public:
  UElement(const Pregroup& p, Word canonical) : p_(&p), word_(std::move(canonical)) {}

  const Pregroup& pregroup() const { return *p_; }
  const Word& word() const { return word_; }
  bool is_identity() const { return word_.size() == 1 && word_[0] == p_->identity(); }
  // Number of letters of the representative; the identity counts as 0.
  std::size_t length() const { return is_identity() ? 0 : word_.size(); }
  std::string str() const { return format_word(*p_, word_); }

  bool operator==(const UElement& o) const { return p_ == o.p_ && word_ == o.word_; }
  auto operator<=>(const UElement& o) const { return word_ <=> o.word_; }

 private:
  const Pregroup* p_;
  Word word_;
};

// Lex-least word of the class of reduce(w).  Throws Error when the reduced
// word is longer than kMaxCanonicalLength.
UElement canonical(const Pregroup& p, const Word& w);
UElement u_identity(const Pregroup& p);
UElement u_mul(const UElement& u, const UElement& v);
UElement u_inv(const UElement& u);
UElement embed(const Pregroup& p, Elem g);

struct Agreement {
  bool in_q = false;
  bool in_p = false;
};

// Decides c ~ d in Q and, after mapping letters by id, in P.  Throws Error
// if q is not a subpregroup of p.
Agreement subgroup_agreement(const Pregroup& q, const Pregroup& p, const Word& c, const Word& d);

}  // namespace stallings
