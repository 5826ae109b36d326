#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vero/error.hpp"
#include "vero/polynomial.hpp"

namespace vero {

namespace detail {

// expr   := term (('+' | '-') term)*
// term   := unary ('*' unary)*
// unary  := ('+' | '-') unary | power
// power  := atom ('^' integer)?
// atom   := integer | variable | '(' expr ')'
template <Field F>
class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr<F>& ring, std::size_t offset)
      : text_(text), ring_(ring), offset_(offset) {}

  Polynomial<F> parse_all() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    auto p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, offset_ + pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    auto acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial<F> term() {
    auto acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial<F> unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial<F> power() {
    auto base = atom();
    if (accept('^')) {
      skip_ws();
      auto start = pos_;
      auto digits = read_digits();
      if (digits.empty()) fail("expected nonnegative integer exponent");
      if (digits.size() > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      return base.pow(std::stoull(digits));
    }
    return base;
  }

  Polynomial<F> atom() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class z(read_digits(), 10);
      return Polynomial<F>::constant(ring_, ring_->field().from_integer(z));
    }
    if (c >= 'a' && c <= 'z') {
      auto start = pos_;
      while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                                     std::isdigit(static_cast<unsigned char>(text_[pos_]))))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial<F>::variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string read_digits() {
    auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const RingPtr<F>& ring_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses one polynomial written in the ideal grammar.
template <Field F>
Polynomial<F> make_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolyParser<F>(text, ring, 0).parse_all();
}

/// Parses a comma-separated list of polynomials. Error positions refer to the whole text.
template <Field F>
std::vector<Polynomial<F>> make_polynomial_list(std::string_view text, const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(detail::PolyParser<F>(text.substr(start, i - start), ring, start).parse_all());
      start = i + 1;
    }
  }
  return out;
}

/// Splits "a, b ,c" into trimmed names; used for ring and subset lists.
inline std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&](std::size_t pos) {
    auto b = cur.find_first_not_of(" \t\n");
    auto e = cur.find_last_not_of(" \t\n");
    if (b == std::string::npos) throw ParseError("empty name in list", pos);
    out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ',')
      flush(i);
    else
      cur += text[i];
  }
  flush(text.size());
  return out;
}

/// Parses "4,0;3,1;1,3" into exponent vectors of equal length.
inline std::vector<std::vector<Exponent>> parse_vector_list(std::string_view text) {
  std::vector<std::vector<Exponent>> rows(1);
  std::string num;
  auto flush = [&](std::size_t pos) {
    auto b = num.find_first_not_of(" \t\n");
    if (b == std::string::npos) throw ParseError("expected nonnegative integer", pos);
    auto e = num.find_last_not_of(" \t\n");
    std::string digits = num.substr(b, e - b + 1);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    if (digits.size() > 9) throw ParseError("integer too large", pos);
    rows.back().push_back(static_cast<Exponent>(std::stoul(digits)));
    num.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ',') {
      flush(i);
    } else if (text[i] == ';') {
      flush(i);
      rows.emplace_back();
    } else {
      num += text[i];
    }
  }
  flush(text.size());
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError("vectors have different lengths", 0);
  return rows;
}

}  // namespace vero
