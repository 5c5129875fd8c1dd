#pragma once

// Text form of polynomials.
//
// Grammar (whitespace insensitive):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)*
//   atom   := nat ['/' nat] | var | '(' expr ')'
// Numbers are unsigned decimal literals; fractions exist only as literal
// "a/b".  Implicit multiplication ("2x", "x y") is a syntax error, as is '/'
// applied to anything but integer literals.  Variables must come from the
// declared list; anything else is UnknownVariable.

#include <cctype>
#include <string>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

namespace detail {

struct Token {
  enum class Type { Int, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
  Type type;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Type::Int, s.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Type::Name, s.substr(start, i - start), start});
      continue;
    }
    Token::Type t;
    switch (c) {
      case '+': t = Token::Type::Plus; break;
      case '-': t = Token::Type::Minus; break;
      case '*': t = Token::Type::Star; break;
      case '^': t = Token::Type::Caret; break;
      case '/': t = Token::Type::Slash; break;
      case '(': t = Token::Type::LParen; break;
      case ')': t = Token::Type::RParen; break;
      default:
        throw Error(Errc::SyntaxError, std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({t, s.substr(start, 1), start});
    ++i;
  }
  out.push_back({Token::Type::End, "", s.size()});
  return out;
}

class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& vars)
      : toks_(tokenize(text)), vars_(vars) {}

  Polynomial<Rational> parse() {
    auto p = expr();
    if (cur().type != Token::Type::End)
      throw Error(Errc::SyntaxError, "expected operator or end of input, got '" + cur().text + "'",
                  cur().pos);
    return p;
  }

 private:
  using P = Polynomial<Rational>;

  const Token& cur() const { return toks_[idx_]; }
  void advance() { ++idx_; }
  bool eat(Token::Type t) {
    if (cur().type != t) return false;
    advance();
    return true;
  }

  int nv() const { return static_cast<int>(vars_.size()); }

  P expr() {
    bool neg = eat(Token::Type::Minus);
    P acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat(Token::Type::Plus)) {
        acc = acc + term();
      } else if (eat(Token::Type::Minus)) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  P term() {
    P acc = factor();
    while (eat(Token::Type::Star)) acc = acc * factor();
    return acc;
  }

  P factor() {
    P base = atom();
    while (cur().type == Token::Type::Caret) {
      std::size_t caret_pos = cur().pos;
      advance();
      if (cur().type != Token::Type::Int)
        throw Error(Errc::SyntaxError, "exponent must be a nonnegative integer literal",
                    cur().type == Token::Type::End ? caret_pos : cur().pos);
      Integer e(cur().text);
      if (!e.fits_sint_p() || e.get_si() > 10000)
        throw Error(Errc::SyntaxError, "exponent too large", cur().pos);
      advance();
      P pow = P::constant(nv(), Rational(1));
      for (long k = 0; k < e.get_si(); ++k) pow = pow * base;
      base = pow;
    }
    return base;
  }

  P atom() {
    const Token& t = cur();
    switch (t.type) {
      case Token::Type::Int: {
        Integer num(t.text);
        advance();
        if (eat(Token::Type::Slash)) {
          if (cur().type != Token::Type::Int)
            throw Error(Errc::SyntaxError, "fraction denominator must be an integer literal",
                        cur().pos);
          Integer den(cur().text);
          if (den == 0) throw Error(Errc::SyntaxError, "zero denominator", cur().pos);
          advance();
          Rational q(num, den);
          q.canonicalize();
          return P::constant(nv(), q);
        }
        return P::constant(nv(), Rational(num));
      }
      case Token::Type::Name: {
        for (int i = 0; i < nv(); ++i)
          if (vars_[i] == t.text) {
            advance();
            return P::variable(nv(), i);
          }
        throw Error(Errc::UnknownVariable, "unknown variable '" + t.text + "'", t.pos);
      }
      case Token::Type::LParen: {
        advance();
        P inner = expr();
        if (!eat(Token::Type::RParen))
          throw Error(Errc::SyntaxError, "expected ')'", cur().pos);
        return inner;
      }
      default:
        throw Error(Errc::SyntaxError, "expected number, variable or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  const std::vector<std::string>& vars_;
};

}  // namespace detail

inline Polynomial<Rational> parse_polynomial(const std::string& text,
                                             const std::vector<std::string>& vars) {
  return detail::PolyParser(text, vars).parse();
}

namespace detail {
inline std::string coeff_to_display(const Rational& q) { return rational_to_string(q); }
inline bool coeff_is_negative(const Rational& q) { return sgn(q) < 0; }
inline Rational coeff_abs(const Rational& q) { return abs(q); }
inline bool coeff_is_one(const Rational& q) { return q == 1; }

inline std::string coeff_to_display(const AlgebraicNumber& a) {
  return a.is_rational() ? rational_to_string(a.rational_value())
                         : "(" + a.to_string() + ")";
}
inline bool coeff_is_negative(const AlgebraicNumber& a) {
  return a.is_rational() && sgn(a.rational_value()) < 0;
}
inline AlgebraicNumber coeff_abs(const AlgebraicNumber& a) {
  return coeff_is_negative(a) ? -a : a;
}
inline bool coeff_is_one(const AlgebraicNumber& a) {
  return a.is_rational() && a.rational_value() == 1;
}
}  // namespace detail

// Canonical text form: terms in storage (degrevlex-descending) order, explicit
// '*' and '^'.  parse_polynomial(render(p)) == p.
template <class K>
std::string render_polynomial(const Polynomial<K>& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    K shown = c;
    if (out.empty()) {
      if (detail::coeff_is_negative(c)) {
        out += "-";
        shown = detail::coeff_abs(c);
      }
    } else {
      if (detail::coeff_is_negative(c)) {
        out += " - ";
        shown = detail::coeff_abs(c);
      } else {
        out += " + ";
      }
    }
    bool have_vars = !mono_is_one(m);
    bool skip_coeff = detail::coeff_is_one(shown) && have_vars;
    if (!skip_coeff) out += detail::coeff_to_display(shown);
    bool first_var = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!first_var || !skip_coeff) out += "*";
      out += vars[i];
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
      first_var = false;
    }
  }
  return out;
}

// Default variable names x1..xn (x, y, z, w for small arities).
inline std::vector<std::string> default_var_names(int n) {
  if (n <= 4) {
    static const std::vector<std::string> xyzw = {"x", "y", "z", "w"};
    return std::vector<std::string>(xyzw.begin(), xyzw.begin() + n);
  }
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

}  // namespace germlab
