#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bvkit/error.hpp"

namespace bvkit::detail {

enum class Tok { number, ident, generator, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end: return "end of input";
    case Tok::generator: return "'@" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < text.size()) {
    char c = text[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && (std::isalpha(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        throw ParseError("implicit multiplication is not allowed", j + 1);
      out.push_back({Tok::number, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::ident, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (c == '@') {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      if (j == i + 1) throw ParseError("expected a generator name after '@'", col + 1);
      out.push_back({Tok::generator, std::string(text.substr(i + 1, j - i - 1)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      case '/': kind = Tok::slash; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", col);
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::end, "", text.size() + 1});
  return out;
}

// Cursor over a token stream shared by the polynomial and exterior parsers.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what + ", found " + describe(peek()), peek().column);
    return next();
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace bvkit::detail
