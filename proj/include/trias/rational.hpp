#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace trias {

/// Exact rational scalar. boost keeps it canonical: lowest terms, positive
/// denominator, so structural equality is value equality.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses the rational literal grammar used in files, CLI arguments and
/// reports: optional sign, integer, optional "/" followed by a positive
/// integer. No whitespace, no extra characters.
inline std::optional<Rational> try_parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = (text[pos] == '-');
    ++pos;
  }
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) return std::nullopt;
  Integer num(std::string(text.substr(num_begin, pos - num_begin)));
  if (negative) num = -num;
  if (pos == text.size()) return Rational(num);
  if (text[pos] != '/') return std::nullopt;
  ++pos;
  const std::size_t den_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == den_begin || pos != text.size()) return std::nullopt;
  Integer den(std::string(text.substr(den_begin)));
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

inline std::string format_rational(const Rational& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

/// Renders a coordinate vector as a combination of basis vectors e1..en,
/// e.g. "e1 + 2*e3 - 1/2*e4"; the zero vector prints as "0".
inline std::string format_combination(const std::vector<Rational>& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Rational& c = coords[i];
    if (c == 0) continue;
    const bool first = out.empty();
    Rational mag = c < 0 ? Rational(-c) : c;
    if (c < 0)
      out += first ? "-" : " - ";
    else if (!first)
      out += " + ";
    if (mag != 1) {
      out += format_rational(mag);
      out += "*";
    }
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace trias
