#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "softtop/error.hpp"

namespace softtop::detail {

// Minimal scanner over one line of literal text. Columns are 1-based and
// offset by `first_column` so callers can report positions inside a larger
// line.
class Cursor {
 public:
  Cursor(std::string_view text, int line, int first_column = 1)
      : text_(text), line_(line), first_column_(first_column) {}

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

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == '\'';
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int column() const { return first_column_ + static_cast<int>(pos_); }
  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column()); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int first_column_;
};

}  // namespace softtop::detail
