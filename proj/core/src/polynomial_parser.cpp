#include <algorithm>
#include <climits>

#include "bvkit/error.hpp"
#include "bvkit/polynomial.hpp"
#include "lexer.hpp"

namespace bvkit {

namespace {

using detail::Tok;
using detail::TokenCursor;

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const std::vector<std::string>& vars)
      : cur_(detail::tokenize(text)), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (cur_.peek().kind != Tok::end)
      throw ParseError("unexpected " + detail::describe(cur_.peek()), cur_.peek().column);
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (cur_.accept(Tok::plus))
        acc += term();
      else if (cur_.accept(Tok::minus))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (cur_.accept(Tok::star)) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (cur_.accept(Tok::minus)) return -unary();
    if (cur_.accept(Tok::plus)) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (cur_.accept(Tok::caret)) {
      const auto& t = cur_.peek();
      if (t.kind != Tok::number)
        throw ParseError("expected a non-negative integer exponent, found " + detail::describe(t), t.column);
      cur_.next();
      if (t.text.size() > 6) throw ParseError("exponent too large", t.column);
      base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
      if (cur_.peek().kind == Tok::caret)
        throw ParseError("chained exponents are ambiguous; use parentheses", cur_.peek().column);
    }
    return base;
  }

  Polynomial atom() {
    const auto& t = cur_.peek();
    switch (t.kind) {
      case Tok::number: {
        cur_.next();
        std::string lit = t.text;
        if (cur_.accept(Tok::slash)) {
          const auto& d = cur_.peek();
          if (d.kind != Tok::number) throw ParseError("malformed rational literal", d.column);
          cur_.next();
          lit += "/" + d.text;
          if (std::all_of(d.text.begin(), d.text.end(), [](char c) { return c == '0'; }))
            throw ParseError("malformed rational literal '" + lit + "' (zero denominator)", d.column);
        }
        return Polynomial::constant(vars_.size(), parse_rational(lit));
      }
      case Tok::ident: {
        cur_.next();
        auto it = std::find(vars_.begin(), vars_.end(), t.text);
        if (it == vars_.end()) throw ParseError("unknown identifier '" + t.text + "'", t.column);
        return Polynomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
      }
      case Tok::lparen: {
        cur_.next();
        Polynomial inner = expr();
        cur_.expect(Tok::rparen, "')'");
        return inner;
      }
      default:
        throw ParseError("unexpected " + detail::describe(t), t.column);
    }
  }

  TokenCursor cur_;
  const std::vector<std::string>& vars_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return PolynomialParser(text, vars).parse();
}

}  // namespace bvkit
