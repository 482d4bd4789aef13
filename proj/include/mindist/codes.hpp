#ifndef MINDIST_CODES_HPP
#define MINDIST_CODES_HPP

// Reed-Muller-type evaluation codes C_X(d) and their minimum distance:
// brute force over codewords, the degree formula delta_I(d) (with zero
// divisors detected by evaluation or by colon ideals), the colon variant,
// and the footprint lower bound fp_I(d).

#include <optional>
#include <string>
#include <vector>

#include "mindist/groebner.hpp"
#include "mindist/hilbert.hpp"
#include "mindist/ideal_ops.hpp"
#include "mindist/linalg.hpp"
#include "mindist/points.hpp"
#include "mindist/search.hpp"

namespace mindist {

struct EvaluationCode {
  PointSet X;
  int d = 0;
  std::vector<Monomial> basis;  // standard monomials of degree d
  linalg::Matrix matrix;        // basis.size() x |X|

  std::size_t length() const noexcept { return X.size(); }
  std::size_t dimension() const noexcept { return basis.size(); }

  /// Sum of coeffs[i] * basis[i].
  Polynomial polynomial(const std::vector<gf::Elem>& coeffs) const {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coeffs[i] != 0) ts.push_back({basis[i], coeffs[i]});
    return Polynomial::from_terms(X.field(), X.arity(), std::move(ts));
  }
};

struct DistanceReport {
  int d = 0;
  std::size_t length = 0;
  std::size_t dimension = 0;
  long long degree = 0;                // deg(S/I)
  std::optional<long long> delta;      // empty when skipped or not computed
  std::optional<long long> fp;
  long long singleton = 0;             // deg - H + 1
  std::optional<Polynomial> witness;
  std::string method;
  bool fd_empty = false;               // no admissible f: delta is deg(S/I) by convention
  bool skipped = false;
  std::string note;
};

/// Values of the monomial m at the stored representatives of X.
inline std::vector<gf::Elem> evaluation_row(const PointSet& X, const Monomial& m) {
  const auto& F = *X.field();
  std::vector<gf::Elem> row;
  row.reserve(X.size());
  for (const auto& P : X) {
    gf::Elem v = 1;
    for (std::size_t i = 0; i < m.size(); ++i) v = F.mul(v, F.pow(P[i], m[i]));
    row.push_back(v);
  }
  return row;
}

/// Rows are standard monomials of degree d evaluated at the points of X.
/// The point representatives have a 1 in their pivot coordinate, so the
/// normalizing factors of the evaluation map are all 1.
inline EvaluationCode build_code(const PointSet& X, const GroebnerBasis& G, int d) {
  if (d < 0) throw PreconditionError("build_code: negative degree");
  if (X.empty()) throw PreconditionError("build_code: empty point set");
  if (G.nvars() != X.arity()) throw std::invalid_argument("build_code: arity mismatch");
  EvaluationCode C{X, d, hilbert::footprint_slice(G.initial_ideal(), d), {}};
  for (const auto& m : C.basis) C.matrix.push_back(evaluation_row(X, m));
  return C;
}

inline EvaluationCode build_code(const PointSet& X, int d) {
  return build_code(X, vanishing_ideal_points(X, canonical_order(X.arity())), d);
}

namespace detail {

/// Largest number of zero entries of a nonzero combination of the rows of M
/// (combinations that vanish identically are skipped). Row updates are
/// incremental along the search walk.
inline search::Best max_zero_count(const gf::Field& F, const linalg::Matrix& M, const search::Options& opt,
                                   const char* what) {
  const std::size_t m = M.empty() ? 0 : M[0].size();
  struct Worker {
    const gf::Field& F;
    const linalg::Matrix& M;
    std::vector<gf::Elem> cw;
    std::size_t zeros;
    void set(std::size_t i, gf::Elem old, gf::Elem now) {
      const gf::Elem delta = F.sub(now, old);
      const auto& row = M[i];
      for (std::size_t k = 0; k < cw.size(); ++k) {
        const gf::Elem before = cw[k];
        const gf::Elem after = F.add(before, F.mul(delta, row[k]));
        cw[k] = after;
        zeros += (after == 0) - (before == 0);
      }
    }
    std::optional<long long> score(std::uint64_t, const std::vector<gf::Elem>&) const {
      if (zeros == cw.size()) return std::nullopt;
      return static_cast<long long>(zeros);
    }
  };
  return search::maximize(F.q(), M.size(), opt, what,
                          [&]() { return Worker{F, M, std::vector<gf::Elem>(m, 0), m}; });
}

}  // namespace detail

/// Exact minimum weight over all nonzero codewords.
inline DistanceReport min_distance_bruteforce(const EvaluationCode& C, const search::Options& opt = {}) {
  const auto& F = *C.X.field();
  const std::size_t m = C.length(), n = C.dimension();
  DistanceReport r;
  r.d = C.d;
  r.length = m;
  r.dimension = n;
  r.degree = static_cast<long long>(m);
  r.singleton = static_cast<long long>(m) - static_cast<long long>(n) + 1;
  r.method = "brute";
  if (n == 0) {
    r.fd_empty = true;
    r.delta = r.degree;
    return r;
  }
  const auto best = detail::max_zero_count(F, C.matrix, opt, "min_distance_bruteforce");
  if (!best.score) throw std::logic_error("min_distance_bruteforce: code has no nonzero codeword");
  r.delta = static_cast<long long>(m) - *best.score;
  r.witness = C.polynomial(search::vector_at(F.q(), n, best.index));
  return r;
}

/// delta via |X| minus the largest zero count of a standard polynomial of
/// degree d that vanishes somewhere on X but not everywhere.
inline DistanceReport delta_via_zeros(const PointSet& X, const GroebnerBasis& G, int d,
                                      const search::Options& opt = {}) {
  if (X.size() < 2) throw PreconditionError("delta_via_zeros: need at least two points");
  if (d < 1) throw PreconditionError("delta_via_zeros: degree must be positive");
  const auto C = build_code(X, G, d);
  const auto& F = *X.field();
  const std::size_t m = X.size(), n = C.dimension();
  DistanceReport r;
  r.d = d;
  r.length = m;
  r.dimension = n;
  r.degree = static_cast<long long>(m);
  r.singleton = static_cast<long long>(m) - static_cast<long long>(n) + 1;
  r.method = "degree";
  struct Worker {
    const gf::Field& F;
    const linalg::Matrix& M;
    std::size_t m;
    void set(std::size_t, gf::Elem, gf::Elem) {}
    std::optional<long long> score(std::uint64_t, const std::vector<gf::Elem>& v) const {
      std::size_t zeros = 0;
      for (std::size_t k = 0; k < m; ++k) {
        gf::Elem x = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (v[i] != 0) x = F.add(x, F.mul(v[i], M[i][k]));
        zeros += x == 0;
      }
      if (zeros == 0 || zeros == m) return std::nullopt;
      return static_cast<long long>(zeros);
    }
  };
  const auto best = search::maximize(F.q(), n, opt, "delta_via_zeros", [&]() { return Worker{F, C.matrix, m}; });
  if (!best.score) {
    r.fd_empty = true;
    r.delta = r.degree;
    return r;
  }
  r.delta = static_cast<long long>(m) - *best.score;
  r.witness = C.polynomial(search::vector_at(F.q(), n, best.index));
  return r;
}

/// deg(S/I) from a Groebner basis of I.
inline long long degree_of(const GroebnerBasis& G) { return hilbert_data(G).degree; }

namespace detail {

inline Polynomial combination(const gf::FieldPtr& field, std::size_t nvars, const std::vector<Monomial>& mons,
                              const std::vector<gf::Elem>& v) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (v[i] != 0) ts.push_back({mons[i], v[i]});
  return Polynomial::from_terms(field, nvars, std::move(ts));
}

inline void require_graded(const GroebnerBasis& G, const char* what) {
  for (const auto& g : G.basis())
    if (!g.is_homogeneous()) throw PreconditionError(std::string(what) + ": ideal is not graded");
  if (G.is_zero_ideal()) throw PreconditionError(std::string(what) + ": zero ideal");
  if (G.is_unit()) throw PreconditionError(std::string(what) + ": unit ideal");
}

}  // namespace detail

/// delta_I(d) = deg(S/I) - max deg(S/(I, f)) over standard f of degree d
/// with (I : f) != I; deg(S/I) when no such f exists (including d = 0).
/// The zero-divisor filter reads (I : f) != I off the Hilbert series of
/// (I, f), whose basis is needed for the degree anyway.
inline DistanceReport delta_graded(const GroebnerBasis& G, int d, const search::Options& opt = {}) {
  detail::require_graded(G, "delta_graded");
  if (d < 0) throw PreconditionError("delta_graded: negative degree");
  DistanceReport r;
  r.d = d;
  r.degree = degree_of(G);
  r.method = "degree";
  const auto slice = hilbert::footprint_slice(G.initial_ideal(), d);
  r.dimension = slice.size();
  r.singleton = r.degree - static_cast<long long>(slice.size()) + 1;
  if (d == 0 || slice.empty()) {
    r.fd_empty = true;
    r.delta = r.degree;
    return r;
  }
  const auto& field = G.field();
  struct Worker {
    const GroebnerBasis& G;
    const std::vector<Monomial>& mons;
    void set(std::size_t, gf::Elem, gf::Elem) {}
    std::optional<long long> score(std::uint64_t, const std::vector<gf::Elem>& v) const {
      const auto f = detail::combination(G.field(), G.nvars(), mons, v);
      const auto Gf = extend(G, {f});
      if (!is_zero_divisor(G, Gf, f.degree())) return std::nullopt;
      return degree_of(Gf);
    }
  };
  const auto best =
      search::maximize(field->q(), slice.size(), opt, "delta_graded", [&]() { return Worker{G, slice}; });
  if (!best.score) {
    r.fd_empty = true;
    r.delta = r.degree;
    return r;
  }
  r.delta = r.degree - *best.score;
  r.witness = detail::combination(field, G.nvars(), slice, search::vector_at(field->q(), slice.size(), best.index));
  return r;
}

/// min deg(S/(I : f)) over standard f of degree d. Agrees with delta_graded
/// for unmixed I; requires a nonzero degree-d standard monomial.
inline DistanceReport delta_colon(const GroebnerBasis& G, int d, const search::Options& opt = {}) {
  detail::require_graded(G, "delta_colon");
  if (d < 0) throw PreconditionError("delta_colon: negative degree");
  const auto slice = hilbert::footprint_slice(G.initial_ideal(), d);
  if (slice.empty()) throw PreconditionError("delta_colon: every monomial of degree d lies in I");
  DistanceReport r;
  r.d = d;
  r.degree = degree_of(G);
  r.dimension = slice.size();
  r.singleton = r.degree - static_cast<long long>(slice.size()) + 1;
  r.method = "colon";
  struct Worker {
    const GroebnerBasis& G;
    const std::vector<Monomial>& mons;
    void set(std::size_t, gf::Elem, gf::Elem) {}
    std::optional<long long> score(std::uint64_t, const std::vector<gf::Elem>& v) const {
      const auto f = detail::combination(G.field(), G.nvars(), mons, v);
      const auto colon = colon_ideal(G.ideal(), f);
      return -degree_of(buchberger(colon, canonical_order(G.nvars())));
    }
  };
  const auto best =
      search::maximize(G.field()->q(), slice.size(), opt, "delta_colon", [&]() { return Worker{G, slice}; });
  r.delta = -*best.score;
  r.witness =
      detail::combination(G.field(), G.nvars(), slice, search::vector_at(G.field()->q(), slice.size(), best.index));
  return r;
}

/// fp_I(d) = deg(S/I) - max deg(S/(in(I), t^a)) over standard t^a of
/// degree d; deg(S/I) when there is none. May be negative.
inline long long fp_bound(const GroebnerBasis& G, int d) {
  detail::require_graded(G, "fp_bound");
  if (d < 0) throw PreconditionError("fp_bound: negative degree");
  const long long deg = degree_of(G);
  const auto& in = G.initial_ideal();
  const auto slice = hilbert::footprint_slice(in, d);
  if (slice.empty()) return deg;
  long long best = 0;
  for (const auto& m : slice) best = std::max(best, hilbert::dim_degree(in.plus(m)).degree);
  return deg - best;
}

/// Upper bound delta'_I(d) >= delta_I(d): the maximization of delta_graded
/// restricted to {0,1} coefficient vectors.
inline DistanceReport delta_upper_subset(const GroebnerBasis& G, int d, const search::Options& opt = {}) {
  detail::require_graded(G, "delta_upper_subset");
  if (d < 0) throw PreconditionError("delta_upper_subset: negative degree");
  const auto slice = hilbert::footprint_slice(G.initial_ideal(), d);
  DistanceReport r;
  r.d = d;
  r.degree = degree_of(G);
  r.dimension = slice.size();
  r.singleton = r.degree - static_cast<long long>(slice.size()) + 1;
  r.method = "subset";
  search::check_budget("delta_upper_subset", 2, slice.size(), opt.budget);
  std::optional<long long> best;
  std::vector<gf::Elem> v(slice.size());
  for (std::uint64_t mask = 1; d > 0 && mask < (std::uint64_t{1} << slice.size()); ++mask) {
    for (std::size_t i = 0; i < slice.size(); ++i) v[i] = (mask >> i) & 1;
    const auto f = detail::combination(G.field(), G.nvars(), slice, v);
    const auto Gf = extend(G, {f});
    if (!is_zero_divisor(G, Gf, d)) continue;
    const auto s = degree_of(Gf);
    if (!best || s > *best) {
      best = s;
      r.witness = f;
    }
  }
  if (!best) {
    r.fd_empty = true;
    r.delta = r.degree;
  } else {
    r.delta = r.degree - *best;
  }
  return r;
}

/// For d >= reg every vector is a codeword; returns f of degree d vanishing
/// at every point of X except the first.
inline Polynomial indicator_polynomial(const PointSet& X, const GroebnerBasis& G, int d) {
  const auto C = build_code(X, G, d);
  std::vector<gf::Elem> e(X.size(), 0);
  e[0] = 1;
  const auto sol = linalg::solve(*X.field(), linalg::transpose(C.matrix), e);
  if (!sol) throw PreconditionError("indicator_polynomial: degree below the regularity");
  return C.polynomial(*sol);
}

enum class Method { Brute, Degree, Fp, All };

inline Method parse_method(const std::string& s) {
  if (s == "brute") return Method::Brute;
  if (s == "degree") return Method::Degree;
  if (s == "fp") return Method::Fp;
  if (s == "all") return Method::All;
  throw ParseError("unknown method '" + s + "' (expected brute, degree, fp or all)");
}

/// One row per d = 1..d_max for the code family of a point set. Rows with
/// d >= reg(S/I(X)) use delta = 1 with an explicit weight-one witness.
/// Method All cross-checks brute force, the evaluation-based degree formula
/// and the colon-based one, throwing logic_error on any disagreement.
inline std::vector<DistanceReport> params_table(const PointSet& X, const GroebnerBasis& G, int d_max, Method method,
                                                const search::Options& opt = {}) {
  if (d_max < 1) throw PreconditionError("params_table: d_max must be at least 1");
  const unsigned reg = regularity_points(G);
  std::vector<DistanceReport> rows;
  for (int d = 1; d <= d_max; ++d) {
    const auto slice = hilbert::footprint_slice(G.initial_ideal(), d);
    DistanceReport r;
    r.d = d;
    r.length = X.size();
    r.dimension = slice.size();
    r.degree = static_cast<long long>(X.size());
    r.singleton = r.degree - static_cast<long long>(slice.size()) + 1;
    const long long fp = fp_bound(G, d);
    try {
      if (method == Method::Fp) {
        r.method = "fp";
      } else if (static_cast<unsigned>(d) >= reg) {
        r.method = "reg";
        r.delta = 1;
        r.witness = X.size() == 1 ? Polynomial::monomial(X.field(), slice.at(0)) : indicator_polynomial(X, G, d);
        if (count_zeros(X, *r.witness) + 1 != X.size()) throw std::logic_error("params_table: bad indicator");
      } else if (method == Method::Brute) {
        r = min_distance_bruteforce(build_code(X, G, d), opt);
      } else if (method == Method::Degree) {
        r = delta_via_zeros(X, G, d, opt);
      } else {
        auto b = min_distance_bruteforce(build_code(X, G, d), opt);
        const auto z = delta_via_zeros(X, G, d, opt);
        const auto g = delta_graded(G, d, opt);
        if (b.delta != z.delta || b.delta != g.delta)
          throw std::logic_error("params_table: methods disagree at d = " + std::to_string(d));
        r = std::move(b);
        r.method = "all";
      }
    } catch (const BudgetExceeded& e) {
      r.skipped = true;
      r.note = e.what();
      if (r.method.empty()) r.method = method == Method::Brute ? "brute" : method == Method::Degree ? "degree" : "all";
    }
    r.d = d;
    r.length = X.size();
    r.dimension = slice.size();
    r.degree = static_cast<long long>(X.size());
    r.singleton = r.degree - static_cast<long long>(slice.size()) + 1;
    r.fp = fp;
    rows.push_back(std::move(r));
  }
  return rows;
}

/// Table for a graded ideal given by its Groebner basis: delta_graded per row.
inline std::vector<DistanceReport> ideal_table(const GroebnerBasis& G, int d_max, Method method,
                                               const search::Options& opt = {}) {
  if (d_max < 1) throw PreconditionError("ideal_table: d_max must be at least 1");
  if (method == Method::Brute) throw PreconditionError("ideal_table: brute force needs a point set");
  std::vector<DistanceReport> rows;
  for (int d = 1; d <= d_max; ++d) {
    DistanceReport r;
    const auto slice = hilbert::footprint_slice(G.initial_ideal(), d);
    try {
      if (method == Method::Fp) {
        r.method = "fp";
      } else {
        r = delta_graded(G, d, opt);
      }
    } catch (const BudgetExceeded& e) {
      r.skipped = true;
      r.method = "degree";
      r.note = e.what();
    }
    r.d = d;
    r.degree = degree_of(G);
    r.dimension = slice.size();
    r.length = static_cast<std::size_t>(r.degree);
    r.singleton = r.degree - static_cast<long long>(slice.size()) + 1;
    r.fp = fp_bound(G, d);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace mindist

#endif  // MINDIST_CODES_HPP
