#include <algorithm>
#include <vector>

#include "bvkit/error.hpp"
#include "bvkit/exterior.hpp"
#include "lexer.hpp"

namespace bvkit {

namespace {

using detail::Tok;
using detail::TokenCursor;

template <class E>
class ExteriorParser {
 public:
  ExteriorParser(std::string_view text, const ContextPtr& ctx) : cur_(detail::tokenize(text)), ctx_(ctx) {}

  E parse() {
    E e = expr();
    if (cur_.peek().kind != Tok::end)
      throw ParseError("unexpected " + detail::describe(cur_.peek()), cur_.peek().column);
    return e;
  }

 private:
  static constexpr bool kPolyvector = std::is_same_v<E, Polyvector>;

  E one() const { return E::scalar(ctx_, ctx_->from(Rational(1))); }

  E expr() {
    E acc = term();
    while (true) {
      if (cur_.accept(Tok::plus))
        acc += term();
      else if (cur_.accept(Tok::minus))
        acc -= term();
      else
        return acc;
    }
  }

  E term() {
    E acc = unary();
    while (true) {
      const auto& t = cur_.peek();
      if (t.kind == Tok::star || (t.kind == Tok::caret && cur_.peek(1).kind != Tok::number)) {
        cur_.next();
        acc = wedge(acc, unary());
      } else if (t.kind == Tok::slash) {
        cur_.next();
        std::size_t col = cur_.peek().column;
        acc *= inverse_of(unary(), col);
      } else {
        return acc;
      }
    }
  }

  // Only nonzero rational multiples of powers of c can be inverted.
  LocalizedElement inverse_of(const E& d, std::size_t col) const {
    if (d.size() != 1 || d.terms().begin()->first != 0)
      throw ParseError("division is only allowed by a power of the denominator", col);
    const LocalizedElement& a = d.terms().begin()->second;
    const Polynomial& c = ctx_->denominator();
    const Polynomial& num = a.numerator();
    int dc = c.total_degree(), dn = num.total_degree();
    unsigned k = 0;
    if (dc > 0) {
      if (dn % dc != 0) throw ParseError("division is only allowed by a power of the denominator", col);
      k = static_cast<unsigned>(dn / dc);
    } else if (dn != 0) {
      throw ParseError("division is only allowed by a power of the denominator", col);
    }
    Polynomial ck = c.pow(k);
    auto order = MonomialOrder::degrevlex();
    Rational lambda = num.leading_coefficient(order) / ck.leading_coefficient(order);
    if (!(ck * lambda == num)) throw ParseError("division is only allowed by a power of the denominator", col);
    // a = lambda c^k / c^p, so 1/a = c^p / (lambda c^k).
    return LocalizedElement(ctx_->localization(), c.pow(a.power()) * (Rational(1) / lambda), k);
  }

  E unary() {
    if (cur_.accept(Tok::minus)) return -unary();
    if (cur_.accept(Tok::plus)) return unary();
    return power();
  }

  E power() {
    E base = atom();
    if (cur_.peek().kind == Tok::caret && cur_.peek(1).kind == Tok::number) {
      cur_.next();
      const auto& t = cur_.next();
      if (t.text.size() > 6) throw ParseError("exponent too large", t.column);
      unsigned e = static_cast<unsigned>(std::stoul(t.text));
      E result = one();
      for (unsigned i = 0; i < e && !result.is_zero(); ++i) result = wedge(result, base);
      if (cur_.peek().kind == Tok::caret && cur_.peek(1).kind == Tok::number)
        throw ParseError("chained exponents are ambiguous; use parentheses", cur_.peek().column);
      return result;
    }
    return base;
  }

  std::size_t variable_index(const detail::Token& t) const {
    const auto& vars = ctx_->variable_names();
    auto it = std::find(vars.begin(), vars.end(), t.text);
    if (it == vars.end()) throw ParseError("unknown identifier '" + t.text + "'", t.column);
    return static_cast<std::size_t>(it - vars.begin());
  }

  E atom() {
    const auto& t = cur_.peek();
    const auto& vars = ctx_->variable_names();
    switch (t.kind) {
      case Tok::number: {
        cur_.next();
        std::string lit = t.text;
        if (cur_.peek().kind == Tok::slash && cur_.peek(1).kind == Tok::number) {
          cur_.next();
          const auto& d = cur_.next();
          lit += "/" + d.text;
          if (std::all_of(d.text.begin(), d.text.end(), [](char c) { return c == '0'; }))
            throw ParseError("malformed rational literal '" + lit + "' (zero denominator)", d.column);
        }
        return E::scalar(ctx_, ctx_->from(parse_rational(lit)));
      }
      case Tok::ident: {
        bool is_var = std::find(vars.begin(), vars.end(), t.text) != vars.end();
        if (!kPolyvector && t.text == "d" && !is_var && cur_.peek(1).kind == Tok::lparen) {
          cur_.next();
          cur_.next();
          const auto& v = cur_.expect(Tok::ident, "a variable name");
          std::size_t j = variable_index(v);
          cur_.expect(Tok::rparen, "')'");
          return E::generator(ctx_, j);
        }
        cur_.next();
        return E::scalar(ctx_, Polynomial::variable(vars.size(), variable_index(t)));
      }
      case Tok::generator: {
        if (!kPolyvector) throw ParseError("generators '@name' are not allowed in a differential form", t.column);
        cur_.next();
        const auto& gens = ctx_->generator_names();
        auto it = std::find(gens.begin(), gens.end(), t.text);
        if (it == gens.end()) throw ParseError("unknown generator '@" + t.text + "'", t.column);
        return E::generator(ctx_, static_cast<std::size_t>(it - gens.begin()));
      }
      case Tok::lparen: {
        cur_.next();
        E inner = expr();
        cur_.expect(Tok::rparen, "')'");
        return inner;
      }
      default:
        throw ParseError("unexpected " + detail::describe(t), t.column);
    }
  }

  TokenCursor cur_;
  ContextPtr ctx_;
};

bool blade_less(Blade a, Blade b) {
  int da = blade_degree(a), db = blade_degree(b);
  if (da != db) return da > db;
  return blade_indices(a) < blade_indices(b);
}

template <class E>
std::string print(const E& e, const std::vector<std::string>& slot_names) {
  if (e.is_zero()) return "0";
  const auto& ctx = e.context();
  std::vector<Blade> blades;
  for (const auto& [b, a] : e.terms()) blades.push_back(b);
  std::sort(blades.begin(), blades.end(), blade_less);
  std::string out;
  for (Blade b : blades) {
    const LocalizedElement& a = e.terms().at(b);
    std::string coef = to_string_in(a, ctx);
    std::string piece;
    if (b == 0) {
      piece = coef;
    } else {
      bool simple = a.is_polynomial() && a.numerator().size() == 1;
      piece = simple ? coef : "(" + coef + ")";
      piece += "*";
      bool first = true;
      for (std::size_t i : blade_indices(b)) {
        if (!first) piece += "^";
        piece += slot_names[i];
        first = false;
      }
    }
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

}  // namespace

Polyvector parse_polyvector(std::string_view text, const ContextPtr& ctx) {
  return ExteriorParser<Polyvector>(text, ctx).parse();
}

DifferentialForm parse_form(std::string_view text, const ContextPtr& ctx) {
  return ExteriorParser<DifferentialForm>(text, ctx).parse();
}

std::string to_string_in(const LocalizedElement& a, const ContextPtr& ctx) {
  return to_string(a, ctx->variable_names());
}

std::string to_string(const Polyvector& u) {
  std::vector<std::string> names;
  for (const auto& g : u.context()->generator_names()) names.push_back("@" + g);
  return print(u, names);
}

std::string to_string(const DifferentialForm& eta) {
  std::vector<std::string> names;
  for (const auto& v : eta.context()->variable_names()) names.push_back("d(" + v + ")");
  return print(eta, names);
}

}  // namespace bvkit
