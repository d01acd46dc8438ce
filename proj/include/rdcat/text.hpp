#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "rdcat/error.hpp"

namespace rdcat {

/// Whitespace-skipping cursor over a complete input. Errors report the 1-based
/// line and column of the offending character.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  /// Character immediately at the cursor, without skipping whitespace.
  char peek_raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) {
      const char got = peek();
      fail(std::string("expected '") + c + "' but found " +
           (got == '\0' ? std::string("end of input") : "'" + std::string(1, got) + "'"));
    }
  }

  /// Consumes `word` when it appears next and is not followed by an identifier character.
  bool consume_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    const char after = peek_raw(word.size());
    if (std::isalnum(static_cast<unsigned char>(after)) || after == '_') return false;
    pos_ += word.size();
    return true;
  }

  bool consume_literal(std::string_view lit) {
    skip_ws();
    if (text_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  template <class Pred>
  std::string_view take_while(Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string_view take_digits() {
    return take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  }

  std::size_t offset() const { return pos_; }
  void rewind(std::size_t offset) { pos_ = offset; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace rdcat
