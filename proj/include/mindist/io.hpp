#ifndef MINDIST_IO_HPP
#define MINDIST_IO_HPP

// Text formats: point files, parameterization files, cartesian set files and
// ideal files. Blank lines and lines starting with '#' are ignored.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mindist/cartesian.hpp"
#include "mindist/groebner.hpp"
#include "mindist/points.hpp"

namespace mindist::io {

inline std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return content_lines(in);
}

/// Comma-separated canonical encodings.
inline std::vector<gf::Elem> parse_encodings(const std::string& line, const gf::Field& F) {
  std::vector<gf::Elem> v;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in '" + line + "'");
    tok = tok.substr(b, e - b + 1);
    unsigned long long x = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw ParseError("bad field element '" + tok + "'");
      x = x * 10 + static_cast<unsigned>(c - '0');
      if (x >= F.q()) throw ParseError("element '" + tok + "' is not an encoding in " + F.name());
    }
    v.push_back(static_cast<gf::Elem>(x));
  }
  return v;
}

inline PointSet parse_points(const std::vector<std::string>& lines, const gf::FieldPtr& field) {
  std::vector<std::vector<gf::Elem>> raw;
  for (const auto& l : lines) {
    raw.push_back(parse_encodings(l, *field));
    if (raw.back().size() != raw.front().size()) throw ParseError("points have different numbers of coordinates");
  }
  if (raw.empty()) throw PreconditionError("empty point set");
  return PointSet::from_raw(field, raw.front().size(), raw);
}

/// One monomial in y1..yn per line.
inline ParameterizedSpec parse_parameterization(const std::vector<std::string>& lines, const gf::FieldPtr& field) {
  std::size_t n = 0;
  for (const auto& l : lines) n = std::max(n, max_variable_index(l, 'y'));
  if (n == 0) throw ParseError("parameterization has no y variables");
  ParameterizedSpec spec{field, n, {}};
  for (const auto& l : lines) {
    const auto f = parse_polynomial(l, field, n, 'y');
    if (f.size() != 1 || f.terms()[0].coeff != 1) throw ParseError("'" + l + "' is not a monomial");
    spec.monomials.push_back(f.terms()[0].mono);
  }
  return spec;
}

inline cartesian::CartesianSpec parse_sets(const std::vector<std::string>& lines, const gf::FieldPtr& field) {
  cartesian::CartesianSpec spec{field, {}};
  for (const auto& l : lines) spec.sets.push_back(parse_encodings(l, *field));
  return spec;
}

/// One polynomial per line; nvars = 0 infers it from the largest t index.
inline Ideal parse_ideal(const std::vector<std::string>& lines, const gf::FieldPtr& field, std::size_t nvars = 0) {
  if (nvars == 0)
    for (const auto& l : lines) nvars = std::max(nvars, max_variable_index(l, 't'));
  if (nvars == 0) throw ParseError("cannot infer the number of variables");
  std::vector<Polynomial> gens;
  for (const auto& l : lines) gens.push_back(parse_polynomial(l, field, nvars));
  return Ideal(field, nvars, std::move(gens));
}

/// Basis elements, one per line, highest term first under the basis order.
inline std::string format_basis(const GroebnerBasis& G) {
  std::string out;
  for (const auto& g : G.basis()) out += g.to_string(&G.order()) + "\n";
  return out;
}

}  // namespace mindist::io

#endif  // MINDIST_IO_HPP
