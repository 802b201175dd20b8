#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "uecsm/complex_matrix.hpp"

namespace uecsm {

/// Malformed matrix text; line and column are 1-based, 0 when not applicable.
struct ParseError : Error {
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                              ": " + message),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

namespace io_detail {

inline bool parse_double(std::string_view text, std::size_t& pos, double& out) {
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr == first) return false;
  pos = std::size_t(ptr - text.data());
  return true;
}

// One signed real-or-imaginary component: [+-]? (digits | 'i' | digits 'i').
// Returns false on malformed input. `imag` reports whether the trailing 'i'
// was present.
inline bool parse_component(std::string_view text, std::size_t& pos, double& value, bool& imag) {
  std::size_t p = pos;
  double sign = 1.0;
  if (p < text.size() && (text[p] == '+' || text[p] == '-')) {
    if (text[p] == '-') sign = -1.0;
    ++p;
  }
  if (p < text.size() && (text[p] == '+' || text[p] == '-')) return false;  // no double signs
  if (p < text.size() && (text[p] == 'i' || text[p] == 'I')) {
    value = sign;
    imag = true;
    pos = p + 1;
    return true;
  }
  double mag = 0.0;
  std::size_t q = p;
  if (!parse_double(text, q, mag)) return false;
  value = sign * mag;
  imag = q < text.size() && (text[q] == 'i' || text[q] == 'I');
  pos = imag ? q + 1 : q;
  return true;
}

}  // namespace io_detail

/// Parses one complex literal: a real part, an imaginary part ending in `i`,
/// or both with no internal spaces, e.g. `1`, `-3i`, `2.5-0.5i`, `1+i`.
inline Complex parse_complex_entry(std::string_view token, std::size_t line = 0,
                                   std::size_t column = 0) {
  std::size_t pos = 0;
  double first = 0.0;
  bool first_imag = false;
  if (!io_detail::parse_component(token, pos, first, first_imag))
    throw ParseError("malformed entry '" + std::string(token) + "'", line, column);
  if (pos == token.size()) {
    const Complex z = first_imag ? Complex(0.0, first) : Complex(first, 0.0);
    if (!is_finite(z)) throw ParseError("entry out of range", line, column);
    return z;
  }
  if (first_imag || (token[pos] != '+' && token[pos] != '-'))
    throw ParseError("malformed entry '" + std::string(token) + "'", line, column);
  double second = 0.0;
  bool second_imag = false;
  if (!io_detail::parse_component(token, pos, second, second_imag) || !second_imag ||
      pos != token.size())
    throw ParseError("malformed entry '" + std::string(token) + "'", line, column);
  const Complex z(first, second);
  if (!is_finite(z)) throw ParseError("entry out of range", line, column);
  return z;
}

/// Matrix text format: the first non-comment line holds the dimension n, the
/// next n such lines hold n whitespace-separated complex entries each.
/// Lines whose first non-blank character is '#' are comments.
inline Matrix parse_matrix(std::string_view text) {
  constexpr std::size_t kMaxDim = 2000;

  std::size_t line_no = 0;
  std::size_t cursor = 0;
  std::size_t n = 0;
  bool have_dim = false;
  Matrix m;
  std::size_t rows_read = 0;

  while (cursor <= text.size()) {
    const std::size_t eol = text.find('\n', cursor);
    std::string_view line = text.substr(cursor, eol == std::string_view::npos ? std::string_view::npos
                                                                              : eol - cursor);
    cursor = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    if (!have_dim) {
      std::size_t pos = first;
      double dim = 0.0;
      if (!io_detail::parse_double(line, pos, dim) || pos != line.find_last_not_of(" \t") + 1 ||
          dim < 1.0 || dim != std::floor(dim))
        throw ParseError("expected a positive integer dimension", line_no, first + 1);
      if (dim > double(kMaxDim)) throw ParseError("dimension too large", line_no, first + 1);
      n = std::size_t(dim);
      m = Matrix(n, n);
      have_dim = true;
      continue;
    }

    if (rows_read == n)
      throw ParseError("unexpected content after the last matrix row", line_no, first + 1);

    std::size_t col = 0;
    std::size_t pos = first;
    while (pos < line.size()) {
      const std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
      if (col == n)
        throw ParseError("row has more than " + std::to_string(n) + " entries", line_no,
                         start + 1);
      m(rows_read, col++) =
          parse_complex_entry(line.substr(start, pos - start), line_no, start + 1);
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
    if (col != n)
      throw ParseError("row has " + std::to_string(col) + " entries, expected " +
                       std::to_string(n),
                       line_no, line.size() + 1);
    ++rows_read;
  }

  if (!have_dim) throw ParseError("empty input", line_no, 1);
  if (rows_read != n)
    throw ParseError("expected " + std::to_string(n) + " rows, found " +
                     std::to_string(rows_read),
                     line_no, 1);
  return m;
}

/// Shortest decimal that round-trips the double exactly.
inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

inline std::string format_complex_entry(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  if (z.real() == 0.0) return format_double(z.imag()) + "i";
  return format_double(z.real()) + (z.imag() < 0.0 ? "-" : "+") +
         format_double(std::abs(z.imag())) + "i";
}

/// Inverse of parse_matrix; exact values round-trip bit-identically.
inline std::string serialize_matrix(const Matrix& m) {
  std::ostringstream out;
  out << m.rows() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_complex_entry(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace uecsm
