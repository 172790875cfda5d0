#include <cctype>
#include <optional>

#include "stallings/formula.hpp"

namespace stallings {

namespace {

struct Token {
  enum class Kind { name, lparen, rparen, comma, dot, eq, neq, bang, amp, bar, star, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_name_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_name_char(c)) {
      std::size_t start = i;
      while (i < s.size() && is_name_char(s[i])) ++i;
      out.push_back({Token::Kind::name, std::string(s.substr(start, i - start)), start});
      continue;
    }
    using K = Token::Kind;
    std::optional<K> kind;
    switch (c) {
      case '(': kind = K::lparen; break;
      case ')': kind = K::rparen; break;
      case ',': kind = K::comma; break;
      case '.': kind = K::dot; break;
      case '=': kind = K::eq; break;
      case '&': kind = K::amp; break;
      case '|': kind = K::bar; break;
      case '*': kind = K::star; break;
      case '!':
        if (i + 1 < s.size() && s[i + 1] == '=') {
          out.push_back({K::neq, "!=", i});
          i += 2;
          continue;
        }
        kind = K::bang;
        break;
      default: break;
    }
    if (!kind) throw ParseError(std::string("unexpected character '") + c + "'", i);
    out.push_back({*kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::Kind::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : tokens_(tokenize(text)), sig_(sig) {}

  Formula formula_to_end() {
    Formula f = formula();
    expect(Token::Kind::end, "end of input");
    return f;
  }

  Term term_to_end() {
    Term t = term();
    expect(Token::Kind::end, "end of input");
    return t;
  }

 private:
  using K = Token::Kind;

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  bool at(K k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw) const { return at(K::name) && peek().text == kw; }

  const Token& expect(K k, std::string_view what) {
    if (!at(k)) {
      throw ParseError("expected " + std::string(what) + (at(K::end) ? " but input ended" : " near '" + peek().text + "'"),
                       peek().pos);
    }
    return tokens_[pos_++];
  }

  Formula formula() {
    if (at_keyword("forall") || at_keyword("exists")) {
      bool universal = peek().text == "forall";
      ++pos_;
      const Token& v = expect(K::name, "variable name");
      if (sig_.kind(v.text) != SymbolKind::none)
        throw ParseError("cannot quantify over symbol '" + v.text + "'", v.pos);
      std::string var = v.text;
      expect(K::dot, "'.' after quantified variable");
      Formula body = formula();
      return universal ? Formula::forall(var, std::move(body)) : Formula::exists(var, std::move(body));
    }
    return disjunction();
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (at(K::bar)) {
      ++pos_;
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unit();
    while (at(K::amp)) {
      ++pos_;
      f = Formula::conj(std::move(f), unit());
    }
    return f;
  }

  Formula unit() {
    if (at(K::bang)) {
      ++pos_;
      return Formula::negate(unit());
    }
    if (at_keyword("forall") || at_keyword("exists")) return formula();
    if (at(K::lparen)) {
      // Either a parenthesised formula or an atom starting with a
      // parenthesised term, e.g. "(x*x)*1 = y".
      std::size_t save = pos_;
      try {
        return atom();
      } catch (const ParseError&) {
        pos_ = save;
      }
      ++pos_;
      Formula f = formula();
      expect(K::rparen, "')'");
      return f;
    }
    return atom();
  }

  Formula atom() {
    if (at(K::name) && sig_.kind(peek().text) == SymbolKind::relation) {
      const Token& r = tokens_[pos_++];
      auto args = arguments(r);
      return Formula::rel(r.text, std::move(args));
    }
    Term lhs = term();
    if (at(K::eq)) {
      ++pos_;
      return Formula::eq(std::move(lhs), term());
    }
    if (at(K::neq)) {
      ++pos_;
      return Formula::neq(std::move(lhs), term());
    }
    throw ParseError("expected '=' or '!=' after term", peek().pos);
  }

  std::vector<Term> arguments(const Token& head) {
    expect(K::lparen, "'(' after '" + head.text + "'");
    std::vector<Term> args;
    args.push_back(term());
    while (at(K::comma)) {
      ++pos_;
      args.push_back(term());
    }
    expect(K::rparen, "')'");
    int arity = sig_.arity(head.text);
    if (static_cast<int>(args.size()) != arity) {
      throw ParseError("arity mismatch: '" + head.text + "' takes " + std::to_string(arity) + " argument(s), got " +
                           std::to_string(args.size()),
                       head.pos);
    }
    return args;
  }

  Term term() {
    Term t = factor();
    while (at(K::star)) {
      const Token& star = tokens_[pos_++];
      if (sig_.kind("mul") != SymbolKind::function || sig_.arity("mul") != 2)
        throw ParseError("'*' needs a binary function symbol 'mul' in the signature", star.pos);
      t = Term::apply("mul", {std::move(t), factor()});
    }
    return t;
  }

  Term factor() {
    if (at(K::lparen)) {
      ++pos_;
      Term t = term();
      expect(K::rparen, "')'");
      return t;
    }
    const Token& n = expect(K::name, "term");
    switch (sig_.kind(n.text)) {
      case SymbolKind::constant: return Term::constant(n.text);
      case SymbolKind::function: return Term::apply(n.text, arguments(n));
      case SymbolKind::relation: throw ParseError("relation symbol '" + n.text + "' used as a term", n.pos);
      case SymbolKind::none: break;
    }
    if (at(K::lparen)) throw ParseError("unknown symbol '" + n.text + "'", n.pos);
    if (n.text == "forall" || n.text == "exists") throw ParseError("unexpected quantifier", n.pos);
    return Term::var(n.text);
  }

  std::vector<Token> tokens_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) { return Parser(text, sig).formula_to_end(); }

Term parse_term(std::string_view text, const Signature& sig) { return Parser(text, sig).term_to_end(); }

}  // namespace stallings
