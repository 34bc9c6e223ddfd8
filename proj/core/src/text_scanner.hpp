#pragma once

// Character scanner shared by the weight and data grammars.

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "bessellab/errors.hpp"

namespace bessellab::detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::size_t position() const noexcept { return pos_; }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  // Accepts the literal word when it is followed by a non-identifier character.
  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  // Decimal literal with optional sign and exponent, or [+-]inf.
  double number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t p = pos_;
    bool negative = false;
    if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) {
      negative = text_[p] == '-';
      ++p;
    }
    if (text_.substr(p, 3) == "inf") {
      pos_ = p + 3;
      return negative ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
    }
    // from_chars rejects a leading '+' and would accept "nan".
    const std::size_t digits = (text_[start] == '+') ? start + 1 : start;
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + digits, text_.data() + text_.size(), value,
                                     std::chars_format::general);
    if (res.ec != std::errc() || std::isnan(value)) fail("expected a number");
    pos_ = static_cast<std::size_t>(res.ptr - text_.data());
    return value;
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_space();
    throw ParseError(message, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Shortest representation that parses back to the same double.
inline std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace bessellab::detail
