#ifndef MINDIST_POINTS_HPP
#define MINDIST_POINTS_HPP

// Finite projective point sets over GF(q) and their vanishing ideals.

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "mindist/groebner.hpp"
#include "mindist/ideal_ops.hpp"

namespace mindist {

/// A point of P^{s-1} stored by its representative whose first nonzero
/// coordinate is 1.
class ProjectivePoint {
 public:
  static ProjectivePoint normalize(const gf::FieldPtr& field, std::vector<gf::Elem> raw) {
    std::size_t k = 0;
    while (k < raw.size() && raw[k] == 0) ++k;
    if (k == raw.size()) throw PreconditionError("normalize: zero vector is not a projective point");
    for (auto x : raw)
      if (!field->contains(x)) throw std::out_of_range("normalize: coordinate outside the field");
    const gf::Elem inv = field->inv(raw[k]);
    for (auto& x : raw) x = field->mul(x, inv);
    return ProjectivePoint(field, std::move(raw), k);
  }

  const gf::FieldPtr& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return coords_.size(); }
  gf::Elem operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<gf::Elem>& coords() const noexcept { return coords_; }
  /// Index of the first nonzero coordinate (where the representative has a 1).
  std::size_t pivot() const noexcept { return pivot_; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords_ <=> b.coords_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  ProjectivePoint(gf::FieldPtr f, std::vector<gf::Elem> c, std::size_t pivot)
      : field_(std::move(f)), coords_(std::move(c)), pivot_(pivot) {}

  gf::FieldPtr field_;
  std::vector<gf::Elem> coords_;
  std::size_t pivot_;
};

/// Deduplicated point set, sorted lexicographically on representatives.
class PointSet {
 public:
  PointSet(gf::FieldPtr field, std::size_t s, std::vector<ProjectivePoint> pts = {})
      : field_(std::move(field)), s_(s), pts_(std::move(pts)) {
    if (s_ == 0 || s_ > kMaxVars) throw PreconditionError("point set: arity must be in [1, 16]");
    for (const auto& p : pts_) {
      if (p.size() != s_) throw std::invalid_argument("point set: point arity mismatch");
      if (!p.field()->same_as(*field_)) throw std::invalid_argument("point set: field mismatch");
    }
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  }

  /// Builds a set from raw coordinate vectors (normalized, zero vectors rejected).
  static PointSet from_raw(const gf::FieldPtr& field, std::size_t s, const std::vector<std::vector<gf::Elem>>& raw) {
    std::vector<ProjectivePoint> pts;
    for (const auto& r : raw) pts.push_back(ProjectivePoint::normalize(field, r));
    return PointSet(field, s, std::move(pts));
  }

  const gf::FieldPtr& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return s_; }
  std::size_t size() const noexcept { return pts_.size(); }
  bool empty() const noexcept { return pts_.empty(); }
  const ProjectivePoint& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<ProjectivePoint>& points() const noexcept { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.s_ == b.s_ && a.pts_ == b.pts_; }

 private:
  gf::FieldPtr field_;
  std::size_t s_;
  std::vector<ProjectivePoint> pts_;
};

/// Image of A_1 x ... x A_s minus the origin.
inline PointSet enumerate_cartesian(const gf::FieldPtr& field, const std::vector<std::vector<gf::Elem>>& sets) {
  const std::size_t s = sets.size();
  if (s == 0) throw PreconditionError("enumerate_cartesian: no factors");
  for (const auto& A : sets) {
    if (A.empty()) throw PreconditionError("enumerate_cartesian: empty factor");
    for (auto a : A)
      if (!field->contains(a)) throw std::out_of_range("enumerate_cartesian: element outside the field");
  }
  std::vector<ProjectivePoint> pts;
  std::vector<std::size_t> idx(s, 0);
  std::vector<gf::Elem> v(s);
  for (;;) {
    bool nonzero = false;
    for (std::size_t i = 0; i < s; ++i) {
      v[i] = sets[i][idx[i]];
      nonzero = nonzero || v[i] != 0;
    }
    if (nonzero) pts.push_back(ProjectivePoint::normalize(field, v));
    std::size_t i = 0;
    while (i < s && ++idx[i] == sets[i].size()) idx[i++] = 0;
    if (i == s) break;
  }
  return PointSet(field, s, std::move(pts));
}

/// All of P^{s-1}(GF(q)).
inline PointSet enumerate_full(const gf::FieldPtr& field, std::size_t s) {
  return enumerate_cartesian(field, std::vector<std::vector<gf::Elem>>(s, field->elements()));
}

/// Projective torus: all coordinates nonzero.
inline PointSet enumerate_torus(const gf::FieldPtr& field, std::size_t s) {
  auto units = field->elements();
  units.erase(units.begin());
  return enumerate_cartesian(field, std::vector<std::vector<gf::Elem>>(s, units));
}

/// Value of homogeneous f at the stored representative of P.
inline gf::Elem evaluate(const Polynomial& f, const ProjectivePoint& P) {
  if (!f.is_homogeneous()) throw PreconditionError("evaluate: polynomial is not homogeneous");
  if (f.nvars() != P.size()) throw std::invalid_argument("evaluate: arity mismatch");
  return f.evaluate(P.coords());
}

/// |V_X(f)|, counted by direct evaluation.
inline std::size_t count_zeros(const PointSet& X, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("count_zeros: f must be nonzero");
  std::size_t n = 0;
  for (const auto& P : X)
    if (evaluate(f, P) == 0) ++n;
  return n;
}

/// (t_i - alpha_i t_k | i != k) with k the pivot of alpha (alpha_k = 1).
inline Ideal point_ideal(const ProjectivePoint& P) {
  const std::size_t s = P.size(), k = P.pivot();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < s; ++i) {
    if (i == k) continue;
    Polynomial g = Polynomial::variable(P.field(), s, i);
    if (P[i] != 0) g -= Polynomial::monomial(P.field(), Monomial::variable(s, k), P[i]);
    gens.push_back(std::move(g));
  }
  return Ideal(P.field(), s, std::move(gens));
}

/// Least d with H(d) = deg(S/I) for the vanishing ideal of a point set.
/// Throws logic_error if H fails to increase strictly before stabilizing.
inline unsigned regularity_points(const GroebnerBasis& G) {
  const auto hd = hilbert_data(G);
  if (hd.dim != 1) throw PreconditionError("regularity_points: S/I must have dimension 1");
  std::size_t prev = 0;
  for (unsigned d = 0;; ++d) {
    const auto h = hilbert::hilbert_function(G.initial_ideal(), static_cast<int>(d));
    if (static_cast<long long>(h) == hd.degree) return d;
    if (d > 0 && h <= prev) throw std::logic_error("regularity_points: Hilbert function not strictly increasing");
    prev = h;
  }
}

/// Reduced Groebner basis of I(X) from the intersection of the point ideals.
inline GroebnerBasis vanishing_ideal_points(const PointSet& X, const MonomialOrder& ord) {
  if (X.empty()) throw PreconditionError("vanishing_ideal_points: empty point set");
  if (ord.arity() != X.arity()) throw std::invalid_argument("vanishing_ideal_points: order arity mismatch");
  Ideal I = point_ideal(X[0]);
  for (std::size_t i = 1; i < X.size(); ++i) I = intersect_ideals(I, point_ideal(X[i]));
  auto G = buchberger(I, ord);
  const auto hd = hilbert_data(G);
  if (hd.dim != 1 || hd.degree != static_cast<long long>(X.size()))
    throw std::logic_error("vanishing_ideal_points: degree does not match the number of points");
  return G;
}

/// Monomials y^{v_1}, ..., y^{v_s} in n parameters.
struct ParameterizedSpec {
  gf::FieldPtr field;
  std::size_t n = 0;
  std::vector<Monomial> monomials;

  void validate() const {
    if (!field) throw PreconditionError("parameterized: missing field");
    if (monomials.size() < 2) throw PreconditionError("parameterized: need at least two monomials");
    if (n == 0) throw PreconditionError("parameterized: no parameters");
    for (const auto& m : monomials) {
      if (m.size() != n) throw std::invalid_argument("parameterized: monomial arity mismatch");
      if (m.is_one()) throw PreconditionError("parameterized: monomial must be nonconstant");
    }
    if (n + 1 + monomials.size() > kMaxVars) throw PreconditionError("parameterized: too many variables");
  }

  /// gcd of all the monomials is 1; then every t_i is a zero-divisor mod I(X).
  bool relatively_prime() const {
    Monomial g = monomials.at(0);
    for (const auto& m : monomials) g = gcd(g, m);
    return g.is_one();
  }
};

/// Points {[y^{v_1} : ... : y^{v_s}] : y in GF(q)^n} (zero images dropped).
inline PointSet parameterized_points(const ParameterizedSpec& spec) {
  spec.validate();
  const auto& F = *spec.field;
  const std::size_t n = spec.n, s = spec.monomials.size();
  std::vector<ProjectivePoint> pts;
  std::vector<gf::Elem> y(n, 0), v(s);
  for (;;) {
    bool nonzero = false;
    for (std::size_t i = 0; i < s; ++i) {
      gf::Elem x = 1;
      for (std::size_t j = 0; j < n; ++j) x = F.mul(x, F.pow(y[j], spec.monomials[i][j]));
      v[i] = x;
      nonzero = nonzero || x != 0;
    }
    if (nonzero) pts.push_back(ProjectivePoint::normalize(spec.field, v));
    std::size_t j = 0;
    while (j < n && ++y[j] == F.q()) y[j++] = 0;
    if (j == n) break;
  }
  return PointSet(spec.field, s, std::move(pts));
}

/// ({t_i - y^{v_i} z} + {y_j^q - y_j}) ∩ S, ring ordered y_1..y_n, z, t_1..t_s.
inline GroebnerBasis vanishing_ideal_elimination(const ParameterizedSpec& spec, const MonomialOrder& ord) {
  spec.validate();
  const std::size_t n = spec.n, s = spec.monomials.size(), N = n + 1 + s;
  if (ord.arity() != s) throw std::invalid_argument("vanishing_ideal_elimination: order arity mismatch");
  const auto& field = spec.field;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < s; ++i) {
    Monomial yz = spec.monomials[i].embed(N, 0) * Monomial::variable(N, n);
    gens.push_back(Polynomial::variable(field, N, n + 1 + i) - Polynomial::monomial(field, yz));
  }
  for (std::size_t j = 0; j < n; ++j)
    gens.push_back(Polynomial::monomial(field, Monomial::variable(N, j, field->q())) -
                   Polynomial::variable(field, N, j));
  return eliminate(Ideal(field, N, std::move(gens)), n + 1, ord);
}

struct ParameterizedResult {
  PointSet points;
  GroebnerBasis by_elimination;
  GroebnerBasis by_intersection;
};

/// Both constructions of I(X); throws logic_error if they disagree.
inline ParameterizedResult vanishing_ideal_parameterized(const ParameterizedSpec& spec, const MonomialOrder& ord) {
  auto X = parameterized_points(spec);
  auto elim = vanishing_ideal_elimination(spec, ord);
  auto inter = vanishing_ideal_points(X, ord);
  if (!(elim == inter)) throw std::logic_error("vanishing_ideal_parameterized: constructions disagree");
  return {std::move(X), std::move(elim), std::move(inter)};
}

}  // namespace mindist

#endif  // MINDIST_POINTS_HPP
