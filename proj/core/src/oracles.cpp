// Classical normal forms for free products, amalgams and HNN extensions.
// These read only the raw group data of a Construction, never the
// pregroup tables, so they can serve as independent test oracles.

#include <algorithm>

#include "stallings/constructions.hpp"

namespace stallings {

namespace {

struct Syllable {
  int factor;
  std::size_t g;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

const RawLetter& letter(const Construction& c, Elem e) {
  if (e >= c.letters.size()) throw Error("oracle: letter outside the carrier");
  return c.letters[e];
}

std::string free_form(const Construction& c, const std::vector<Elem>& word) {
  const FiniteGroup* f[2] = {&c.groups[0], &c.groups[1]};
  std::vector<Syllable> st;
  for (Elem e : word) {
    const auto& l = letter(c, e);
    if (l.g == f[l.factor]->identity()) continue;
    if (!st.empty() && st.back().factor == l.factor) {
      st.back().g = f[l.factor]->mul(st.back().g, l.g);
      if (st.back().g == f[l.factor]->identity()) st.pop_back();
    } else {
      st.push_back({l.factor, l.g});
    }
  }
  std::vector<std::string> parts;
  for (const auto& s : st) parts.push_back(f[s.factor]->id(s.g));
  return join(parts);
}

std::string amalgam_form(const Construction& c, const std::vector<Elem>& word) {
  const FiniteGroup* f[2] = {&c.groups[0], &c.groups[1]};
  const FiniteGroup& cg = c.groups[2];
  const std::vector<std::size_t>* emb[2] = {&c.c_in_a, &c.c_in_b};
  // factor element -> C index, or cg.size() outside C
  std::vector<std::size_t> to_c[2];
  for (int k = 0; k < 2; ++k) {
    to_c[k].assign(f[k]->size(), cg.size());
    for (std::size_t i = 0; i < cg.size(); ++i) to_c[k][(*emb[k])[i]] = i;
  }
  auto in_c = [&](const Syllable& s) { return to_c[s.factor][s.g] != cg.size(); };
  auto move_to = [&](const Syllable& s, int factor) {
    return Syllable{factor, (*emb[factor])[to_c[s.factor][s.g]]};
  };

  // Merge syllables until they alternate and none lies in C (except a
  // lone C element).
  std::vector<Syllable> st;
  for (Elem e : word) {
    const auto& l = letter(c, e);
    Syllable s{l.factor, l.g};
    for (;;) {
      if (st.empty()) {
        st.push_back(s);
        break;
      }
      Syllable& top = st.back();
      if (in_c(s)) s = move_to(s, top.factor);
      if (in_c(top)) top = move_to(top, s.factor);
      if (top.factor != s.factor) {
        st.push_back(s);
        break;
      }
      s = Syllable{s.factor, f[s.factor]->mul(top.g, s.g)};
      st.pop_back();
    }
    // a C element left on top merges into the syllable below it
    while (st.size() > 1 && in_c(st.back())) {
      Syllable top = st.back();
      st.pop_back();
      Syllable& below = st.back();
      below.g = f[below.factor]->mul(below.g, move_to(top, below.factor).g);
    }
  }

  // Right to left: g = c' r with r lex-least in C g; carry c' leftwards.
  std::size_t carry = cg.identity();
  std::vector<std::string> reps;
  for (auto it = st.rbegin(); it != st.rend(); ++it) {
    const FiniteGroup& fg = *f[it->factor];
    std::size_t h = fg.mul(it->g, (*emb[it->factor])[carry]);
    if (st.size() == 1 && in_c({it->factor, h})) {
      carry = to_c[it->factor][h];
      break;
    }
    std::size_t best = fg.size();
    for (std::size_t k = 0; k < cg.size(); ++k) best = std::min(best, fg.mul((*emb[it->factor])[k], h));
    reps.push_back(fg.id(best));
    carry = to_c[it->factor][fg.mul(h, fg.inv(best))];
  }
  std::reverse(reps.begin(), reps.end());
  std::string head = carry == cg.identity() ? "" : cg.id(carry);
  return head + "|" + join(reps);
}

std::string hnn_form(const Construction& c, const std::vector<Elem>& word) {
  const FiniteGroup& g = c.groups[0];
  const std::size_t n = g.size();
  std::vector<std::size_t> theta(n, n), theta_inv(n, n);
  for (std::size_t i = 0; i < c.c1.size(); ++i) {
    theta[c.c1[i]] = c.theta[i];
    theta_inv[c.theta[i]] = c.c1[i];
  }
  // tokens: t^+1, t^-1 or a G element
  struct Tok {
    int t;  // 0 for a group element
    std::size_t g;
  };
  std::vector<Tok> st;
  auto push_g = [&](std::size_t h) {
    if (!st.empty() && st.back().t == 0) {
      st.back().g = g.mul(st.back().g, h);
    } else {
      st.push_back({0, h});
    }
  };
  auto push_t = [&](int eps) {
    std::size_t mid = g.identity();
    std::size_t k = st.size();
    if (k > 0 && st[k - 1].t == 0) {
      mid = st[k - 1].g;
      --k;
    }
    if (k > 0 && st[k - 1].t == -eps) {
      // t^-1 c t with c in C1, or t c t^-1 with c in C2
      std::size_t img = eps == 1 ? theta[mid] : theta_inv[mid];
      if (img != n) {
        st.resize(k - 1);
        push_g(img);
        return;
      }
    }
    st.push_back({eps, 0});
  };
  for (Elem e : word) {
    const auto& l = letter(c, e);
    if (l.e0) push_t(-1);
    push_g(l.g);
    if (l.e1) push_t(1);
  }

  // g0 t^e1 g1 ... : left to right, g = r c with r lex-least in g C and
  // c t = t theta(c), c' t^-1 = t^-1 theta^-1(c').
  std::vector<std::string> parts;
  std::size_t carry = g.identity();
  const auto& tname = c.stable_letter;
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (st[i].t == 0) continue;
    std::size_t h = carry;
    if (i > 0 && st[i - 1].t == 0) h = g.mul(carry, st[i - 1].g);
    const auto& sub = st[i].t == 1 ? c.c1 : c.c2;
    std::size_t best = n;
    for (auto x : sub) best = std::min(best, g.mul(h, x));
    std::size_t rest = g.mul(g.inv(best), h);  // in the subgroup
    if (best != g.identity()) parts.push_back(g.id(best));
    parts.push_back(st[i].t == 1 ? tname : tname + "i");
    carry = st[i].t == 1 ? theta[rest] : theta_inv[rest];
  }
  std::size_t last = carry;
  if (!st.empty() && st.back().t == 0) last = g.mul(carry, st.back().g);
  if (last != g.identity()) parts.push_back(g.id(last));
  return join(parts);
}

}  // namespace

std::string oracle_normal_form(const Construction& c, const std::vector<Elem>& word) {
  switch (c.kind) {
    case ConstructionKind::free: return free_form(c, word);
    case ConstructionKind::amalgam: return amalgam_form(c, word);
    case ConstructionKind::hnn: return hnn_form(c, word);
  }
  throw Error("oracle: unsupported construction kind");
}

}  // namespace stallings
