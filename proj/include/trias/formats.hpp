#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "trias/endo.hpp"
#include "trias/errors.hpp"
#include "trias/trialgebra.hpp"

namespace trias {

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == '#') break;  // comment to end of line
    if (std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])) &&
           line[pos] != '#')
      ++pos;
    tokens.push_back({std::string(line.substr(start, pos - start)), start + 1});
  }
  return tokens;
}

inline std::size_t parse_index(const std::string& file, std::size_t line_no, const Token& token,
                               std::size_t dim, const char* what) {
  std::size_t value = 0;
  for (char ch : token.text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError(file, line_no, token.column, std::string("expected ") + what + ", got '" +
                                                        token.text + "'");
    value = value * 10 + static_cast<std::size_t>(ch - '0');
    if (value > dim) break;
  }
  if (value < 1 || value > dim)
    throw ParseError(file, line_no, token.column,
                     std::string(what) + " out of range 1.." + std::to_string(dim));
  return value;
}

inline Rational parse_rational_token(const std::string& file, std::size_t line_no, const Token& token) {
  auto value = try_parse_rational(token.text);
  if (!value)
    throw ParseError(file, line_no, token.column, "expected rational literal, got '" + token.text + "'");
  return *value;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// .trias algebra files
//
//   trias v1
//   dim <n>
//   name <text>                (optional)
//   param <name> <rational>    (optional, repeated)
//   <left|right|middle> <i> <j> <k> <rational>
//
// Omitted entries are zero; duplicate (product, i, j, k) keys are an error;
// '#' starts a comment. Indices are 1-based.

inline Trialgebra parse_trialgebra(std::istream& in, const std::string& file = "<input>") {
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false, saw_dim = false;
  Trialgebra t;
  std::vector<bool> assigned;

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<detail::Token> tokens = detail::tokenize(line);
    if (tokens.empty()) continue;

    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0].text != "trias" || tokens[1].text != "v1")
        throw ParseError(file, line_no, tokens[0].column, "expected header 'trias v1'");
      saw_header = true;
      continue;
    }
    if (!saw_dim) {
      if (tokens[0].text != "dim")
        throw ParseError(file, line_no, tokens[0].column, "expected 'dim <n>' after header");
      if (tokens.size() != 2)
        throw ParseError(file, line_no, tokens[0].column, "'dim' takes exactly one argument");
      std::size_t n = 0;
      for (char ch : tokens[1].text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError(file, line_no, tokens[1].column, "dimension must be a positive integer");
        n = n * 10 + static_cast<std::size_t>(ch - '0');
        if (n > 64) throw ParseError(file, line_no, tokens[1].column, "dimension exceeds maximum 64");
      }
      if (n == 0) throw ParseError(file, line_no, tokens[1].column, "dimension must be positive");
      t = Trialgebra(n);
      assigned.assign(3 * n * n * n, false);
      saw_dim = true;
      continue;
    }

    if (tokens[0].text == "name") {
      if (tokens.size() < 2)
        throw ParseError(file, line_no, tokens[0].column, "'name' requires a value");
      std::string value;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (i > 1) value += ' ';
        value += tokens[i].text;
      }
      t.name = value;
      continue;
    }
    if (tokens[0].text == "param") {
      if (tokens.size() != 3)
        throw ParseError(file, line_no, tokens[0].column, "'param' takes a name and a rational");
      t.params[tokens[1].text] = detail::parse_rational_token(file, line_no, tokens[2]);
      continue;
    }

    auto product = product_from_name(tokens[0].text);
    if (!product)
      throw ParseError(file, line_no, tokens[0].column,
                       "expected 'left', 'right', 'middle', 'name' or 'param', got '" +
                           tokens[0].text + "'");
    if (tokens.size() != 5)
      throw ParseError(file, line_no, tokens[0].column,
                       "product lines take exactly '<product> i j k rational'");
    const std::size_t i = detail::parse_index(file, line_no, tokens[1], t.dim, "index i");
    const std::size_t j = detail::parse_index(file, line_no, tokens[2], t.dim, "index j");
    const std::size_t k = detail::parse_index(file, line_no, tokens[3], t.dim, "index k");
    const Rational value = detail::parse_rational_token(file, line_no, tokens[4]);

    const std::size_t product_index = static_cast<std::size_t>(*product);
    const std::size_t slot =
        ((product_index * t.dim + (i - 1)) * t.dim + (j - 1)) * t.dim + (k - 1);
    if (assigned[slot])
      throw ParseError(file, line_no, tokens[0].column,
                       "duplicate entry for " + tokens[0].text + " " + std::to_string(i) + " " +
                           std::to_string(j) + " " + std::to_string(k));
    assigned[slot] = true;
    t.tensor(*product).at(i - 1, j - 1, k - 1) = value;
  }

  if (!saw_header) throw ParseError(file, line_no + 1, 1, "missing header 'trias v1'");
  if (!saw_dim) throw ParseError(file, line_no + 1, 1, "missing 'dim <n>' line");
  return t;
}

inline void write_trialgebra(std::ostream& os, const Trialgebra& t) {
  os << "trias v1\n";
  os << "dim " << t.dim << "\n";
  if (!t.name.empty()) os << "name " << t.name << "\n";
  for (const auto& [name, value] : t.params) os << "param " << name << " " << value << "\n";
  for (Product p : kAllProducts) {
    const StructureTensor& c = t.tensor(p);
    for (std::size_t i = 0; i < t.dim; ++i)
      for (std::size_t j = 0; j < t.dim; ++j)
        for (std::size_t k = 0; k < t.dim; ++k)
          if (c.at(i, j, k) != 0)
            os << product_name(p) << " " << i + 1 << " " << j + 1 << " " << k + 1 << " "
               << c.at(i, j, k) << "\n";
  }
}

// ---------------------------------------------------------------------------
// .mat endomorphism files
//
//   matrix v1
//   dim <n>
//   <n rows of n rationals, row-major>
//
// Entry (r, c) is the coefficient of e_r in the image of e_c.

inline EndoMatrix parse_endo_matrix(std::istream& in, const std::string& file = "<input>") {
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  std::size_t dim = 0, rows_read = 0;
  EndoMatrix m;

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<detail::Token> tokens = detail::tokenize(line);
    if (tokens.empty()) continue;

    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0].text != "matrix" || tokens[1].text != "v1")
        throw ParseError(file, line_no, tokens[0].column, "expected header 'matrix v1'");
      saw_header = true;
      continue;
    }
    if (dim == 0) {
      if (tokens[0].text != "dim" || tokens.size() != 2)
        throw ParseError(file, line_no, tokens[0].column, "expected 'dim <n>' after header");
      for (char ch : tokens[1].text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError(file, line_no, tokens[1].column, "dimension must be a positive integer");
        dim = dim * 10 + static_cast<std::size_t>(ch - '0');
        if (dim > 64) throw ParseError(file, line_no, tokens[1].column, "dimension exceeds maximum 64");
      }
      if (dim == 0) throw ParseError(file, line_no, tokens[1].column, "dimension must be positive");
      m = EndoMatrix(dim);
      continue;
    }
    if (rows_read == dim)
      throw ParseError(file, line_no, tokens[0].column, "unexpected content after matrix rows");
    if (tokens.size() != dim)
      throw ParseError(file, line_no, tokens[0].column,
                       "expected " + std::to_string(dim) + " entries in matrix row");
    for (std::size_t c = 0; c < dim; ++c)
      m.at(rows_read, c) = detail::parse_rational_token(file, line_no, tokens[c]);
    ++rows_read;
  }

  if (!saw_header) throw ParseError(file, line_no + 1, 1, "missing header 'matrix v1'");
  if (dim == 0) throw ParseError(file, line_no + 1, 1, "missing 'dim <n>' line");
  if (rows_read != dim)
    throw ParseError(file, line_no + 1, 1,
                     "expected " + std::to_string(dim) + " matrix rows, got " +
                         std::to_string(rows_read));
  return m;
}

inline void write_endo_matrix(std::ostream& os, const EndoMatrix& m) {
  os << "matrix v1\n";
  os << "dim " << m.dim() << "\n";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) os << " ";
      os << m.at(r, c);
    }
    os << "\n";
  }
}

}  // namespace trias
