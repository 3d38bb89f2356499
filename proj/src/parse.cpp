#include "ksod/parse.hpp"

#include <cctype>
#include <limits>

#include "ksod/error.hpp"

namespace ksod {

namespace {

constexpr unsigned long kMaxExponent = 1024;

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset) : text_(text), pos_(offset) {}

  BiPoly parse_all(std::size_t end) {
    end_ = end;
    BiPoly p = expr();
    skip_space();
    if (pos_ < end_) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_;
  std::size_t end_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

  void skip_space() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < end_ && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  BiPoly expr() {
    BiPoly acc = accept('-') ? -term() : term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  BiPoly factor() {
    BiPoly b = base();
    if (!accept('^')) return b;
    skip_space();
    if (pos_ >= end_ || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a natural number exponent after '^'");
    }
    const std::string e = digits();
    if (e.size() > 6 || std::stoul(e) > kMaxExponent) fail("exponent " + e + " is too large");
    return b.pow(static_cast<unsigned>(std::stoul(e)));
  }

  BiPoly base() {
    skip_space();
    if (pos_ >= end_) fail("unexpected end of input, expected 'z', 'w', a number or '('");
    const char c = text_[pos_];
    if (c == 'z') {
      ++pos_;
      return BiPoly::z();
    }
    if (c == 'w') {
      ++pos_;
      return BiPoly::w();
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) fail(pos_ < end_ ? "expected ')'" : "unexpected end of input, expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits());
      Integer den(1);
      if (pos_ < end_ && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= end_ || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected a denominator after '/'");
        }
        den = Integer(digits());
        if (den == 0) {
          --pos_;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return BiPoly::constant(q);
    }
    fail("unexpected '" + std::string(1, c) + "', expected 'z', 'w', a number or '('");
  }
};

}  // namespace

BiPoly parse_polynomial(std::string_view text) { return Parser(text, 0).parse_all(text.size()); }

std::vector<BiPoly> parse_polynomial_list(std::string_view text) {
  std::vector<BiPoly> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(Parser(text, start).parse_all(i));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace ksod
