// Copyright 2026 The bgroid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Structure-table files.
//
// Layout written by write_structure_file():
//
//   n
//   m
//   <blank>
//   u_left  (n values, each followed by one space)
//   u_right
//   inv
//   <blank>
//   n table rows (n values, each followed by one space; 0 = undefined)
//
// Every line ends in '\n'. The reader is strict on the two header lines and
// whitespace-tolerant afterwards.

#pragma once

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bgroid/algebra.hpp"

namespace bgroid {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  [[nodiscard]] int line() const noexcept { return line_; }
  [[nodiscard]] int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  struct Token {
    std::string_view text;
    int line;
    int column;
  };

  /// Next whitespace-separated token, or an empty token at end of input.
  Token next() {
    while (pos_ < text_.size() && is_space(text_[pos_])) advance();
    const int line = line_, column = column_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) advance();
    return {text_.substr(start, pos_ - start), line, column};
  }

  /// The remainder of the current line, consuming its newline.
  Token line() {
    const int line = line_, column = column_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '\n') advance();
    Token t{text_.substr(start, pos_ - start), line, column};
    if (pos_ < text_.size()) advance();
    return t;
  }

  [[nodiscard]] bool at_end() const noexcept { return pos_ >= text_.size(); }
  [[nodiscard]] int current_line() const noexcept { return line_; }
  [[nodiscard]] int current_column() const noexcept { return column_; }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

inline long parse_integer(std::string_view text, int line, int column) {
  if (text.empty()) throw ParseError("expected an integer, found end of input", line, column);
  const std::string s(text);
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw ParseError("expected an integer, found '" + s + "'", line, column);
  }
  return v;
}

/// A header line must hold exactly one integer.
inline long parse_header_line(Tokenizer& tok, std::string_view name) {
  const auto ln = tok.line();
  Tokenizer inner(ln.text);
  const auto t = inner.next();
  if (t.text.empty()) {
    throw ParseError("missing " + std::string(name) + " on header line", ln.line, 1);
  }
  const long v = parse_integer(t.text, ln.line, t.column);
  const auto extra = inner.next();
  if (!extra.text.empty()) {
    throw ParseError("unexpected '" + std::string(extra.text) + "' after " + std::string(name),
                     ln.line, extra.column);
  }
  return v;
}

}  // namespace detail

/**
 * Parses a structure-table file. Values are range-checked against 0..n but
 * the algebra axioms are not checked.
 */
inline FiniteAlgebra parse_structure_file(std::string_view text) {
  detail::Tokenizer tok(text);
  const long n = detail::parse_header_line(tok, "n");
  if (n < 1 || n > kMaxOrder) {
    throw ParseError("n must be in 1.." + std::to_string(kMaxOrder) + ", got " + std::to_string(n), 1, 1);
  }
  const long m = detail::parse_header_line(tok, "m");
  if (m < 1 || m > n) {
    throw ParseError("m must be in 1..n, got " + std::to_string(m), 2, 1);
  }
  FiniteAlgebra a(static_cast<int>(n), static_cast<int>(m));
  const auto read_value = [&](std::string_view what) {
    const auto t = tok.next();
    if (t.text.empty()) {
      throw ParseError("unexpected end of input while reading " + std::string(what),
                       tok.current_line(), tok.current_column());
    }
    const long v = detail::parse_integer(t.text, t.line, t.column);
    if (v < 0 || v > n) {
      throw ParseError(std::string(what) + " value " + std::to_string(v) + " outside 0.." +
                           std::to_string(n),
                       t.line, t.column);
    }
    return static_cast<Element>(v);
  };
  const auto ni = static_cast<Element>(n);
  for (Element i = 1; i <= ni; ++i) a.set_u_left(i, read_value("u_left"));
  for (Element i = 1; i <= ni; ++i) a.set_u_right(i, read_value("u_right"));
  for (Element i = 1; i <= ni; ++i) a.set_inv(i, read_value("inv"));
  for (Element i = 1; i <= ni; ++i) {
    for (Element j = 1; j <= ni; ++j) a.set_product(i, j, read_value("table"));
  }
  const auto rest = tok.next();
  if (!rest.text.empty()) {
    throw ParseError("trailing data '" + std::string(rest.text) + "'", rest.line, rest.column);
  }
  return a;
}

inline FiniteAlgebra parse_structure_file(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_structure_file(std::string_view(text));
}

inline FiniteAlgebra read_structure_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_structure_file(in);
}

inline void write_structure_file(std::ostream& out, const FiniteAlgebra& a) {
  out << a.order() << '\n' << a.unit_count() << "\n\n";
  for (const auto* row : {&a.u_left_row(), &a.u_right_row(), &a.inv_row()}) {
    for (Element v : *row) out << v << ' ';
    out << '\n';
  }
  out << '\n';
  for (Element i = 1; i <= a.order(); ++i) {
    for (Element j = 1; j <= a.order(); ++j) out << a.product(i, j) << ' ';
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed to write structure file");
}

inline std::string write_structure_file(const FiniteAlgebra& a) {
  std::ostringstream out;
  write_structure_file(out, a);
  return out.str();
}

inline void save_structure_file(const std::string& path, const FiniteAlgebra& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot create '" + path + "'");
  write_structure_file(out, a);
}

}  // namespace bgroid
