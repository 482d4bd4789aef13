#ifndef MINDIST_CARTESIAN_HPP
#define MINDIST_CARTESIAN_HPP

// Projective nested cartesian sets [A_1 x ... x A_s]: validation, the
// monomial ideal L = (t_i t_j^{d_j} : i < j), closed forms for degree and
// regularity, degrees of S/(L, t^a), the conjectured minimum distance and
// the integer inequalities behind the bounds.
//
// Exponent vectors here are 0-based arrays but the formulas are written
// with the usual 1-based indices: d[0] is d_1.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mindist/codes.hpp"
#include "mindist/hilbert.hpp"
#include "mindist/points.hpp"

namespace mindist::cartesian {

using Exps = std::vector<long long>;

struct CartesianSpec {
  gf::FieldPtr field;
  std::vector<std::vector<gf::Elem>> sets;  // A_1, ..., A_s

  std::size_t s() const noexcept { return sets.size(); }
  Exps sizes() const {
    Exps d;
    for (const auto& A : sets) d.push_back(static_cast<long long>(A.size()));
    return d;
  }
};

struct Violation {
  int condition = 0;  // 1: {0,1} ⊆ A_i, 2: a/b ∈ A_j, 3: sizes
  std::size_t i = 0, j = 0;  // 1-based
  gf::Elem a = 0, b = 0;
  std::string message;
};

struct NestedReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the three nested conditions and lists every violation. Throws only
/// for malformed input (s < 2, elements outside the field, repeated elements).
inline NestedReport validate_nested(const CartesianSpec& spec) {
  if (!spec.field) throw PreconditionError("validate_nested: missing field");
  if (spec.s() < 2) throw PreconditionError("validate_nested: need s >= 2");
  const auto& F = *spec.field;
  std::vector<std::set<gf::Elem>> sets;
  for (const auto& A : spec.sets) {
    std::set<gf::Elem> S;
    for (auto a : A) {
      if (!F.contains(a)) throw std::out_of_range("validate_nested: element outside the field");
      if (!S.insert(a).second) throw PreconditionError("validate_nested: repeated element in a factor");
    }
    sets.push_back(std::move(S));
  }
  NestedReport rep;
  const std::size_t s = spec.s();
  for (std::size_t i = 0; i < s; ++i)
    for (gf::Elem x : {gf::Elem{0}, gf::Elem{1}})
      if (!sets[i].count(x))
        rep.violations.push_back({1, i + 1, i + 1, x, 0, "A_" + std::to_string(i + 1) + " lacks " + std::to_string(x)});
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      for (auto a : sets[j])
        for (auto b : sets[i]) {
          if (b == 0) continue;
          const auto c = F.div(a, b);
          if (!sets[j].count(c))
            rep.violations.push_back({2, i + 1, j + 1, a, b,
                                      std::to_string(a) + "/" + std::to_string(b) + " not in A_" +
                                          std::to_string(j + 1)});
        }
  if (sets[0].size() < 2)
    rep.violations.push_back({3, 1, 1, 0, 0, "|A_1| < 2"});
  for (std::size_t i = 0; i + 1 < s; ++i)
    if (sets[i].size() > sets[i + 1].size())
      rep.violations.push_back({3, i + 1, i + 2, 0, 0,
                                "|A_" + std::to_string(i + 1) + "| > |A_" + std::to_string(i + 2) + "|"});
  return rep;
}

/// Every A_i is a subfield of GF(q) and A_1 ⊆ ... ⊆ A_s.
inline bool is_subfield_chain(const CartesianSpec& spec) {
  const auto& F = *spec.field;
  std::vector<std::set<gf::Elem>> sets;
  for (const auto& A : spec.sets) {
    std::set<gf::Elem> S(A.begin(), A.end());
    bool sub = false;
    for (std::uint32_t k = 1; k <= F.e() && !sub; ++k) {
      if (F.e() % k) continue;
      const auto E = F.subfield_elements(k);
      sub = std::set<gf::Elem>(E.begin(), E.end()) == S;
    }
    if (!sub) return false;
    sets.push_back(std::move(S));
  }
  for (std::size_t i = 0; i + 1 < sets.size(); ++i)
    if (!std::includes(sets[i + 1].begin(), sets[i + 1].end(), sets[i].begin(), sets[i].end())) return false;
  return true;
}

inline PointSet cartesian_points(const CartesianSpec& spec) { return enumerate_cartesian(spec.field, spec.sets); }

namespace detail {

inline void require_sizes(const Exps& d, const char* what) {
  if (d.size() < 2) throw PreconditionError(std::string(what) + ": need s >= 2");
  if (d.size() > kMaxVars) throw PreconditionError(std::string(what) + ": too many variables");
  if (d[0] < 2) throw PreconditionError(std::string(what) + ": need d_1 >= 2");
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i] > d[i + 1]) throw PreconditionError(std::string(what) + ": sizes must be non-decreasing");
}

/// (d_i - a_i) ... (d_s - a_s) for 1-based i; 1 when i > s.
inline long long tail_product(const Exps& d, const Exps& a, std::size_t i) {
  long long p = 1;
  for (std::size_t k = i; k <= d.size(); ++k) p *= d[k - 1] - a[k - 1];
  return p;
}

/// 1-based index of the first nonzero exponent; throws unless t^a is a
/// standard monomial of S/L.
inline std::size_t check_standard(const Exps& d, const Exps& a, const char* what) {
  require_sizes(d, what);
  if (a.size() != d.size()) throw std::invalid_argument(std::string(what) + ": exponent arity mismatch");
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw PreconditionError(std::string(what) + ": negative exponent");
    if (r == 0 && a[i] > 0) r = i + 1;
  }
  if (r == 0) throw PreconditionError(std::string(what) + ": t^a must have positive degree");
  for (std::size_t i = r + 1; i <= a.size(); ++i)
    if (a[i - 1] > d[i - 1] - 1) throw PreconditionError(std::string(what) + ": t^a is not standard for L");
  return r;
}

}  // namespace detail

inline long long closed_deg(const Exps& d) {
  detail::require_sizes(d, "closed_deg");
  long long sum = 1, prod = 1;
  for (std::size_t i = d.size(); i >= 2; --i) {
    prod *= d[i - 1];
    sum += prod;
  }
  return sum;
}

inline long long closed_reg(const Exps& d) {
  detail::require_sizes(d, "closed_reg");
  long long r = 1;
  for (std::size_t i = 1; i < d.size(); ++i) r += d[i] - 1;
  return r;
}

struct LIdeal {
  Exps d;
  hilbert::MonomialIdeal gens{0};
  std::vector<hilbert::MonomialIdeal> components;  // q_1, ..., q_s
  long long degree = 0;
};

/// L = (t_i t_j^{d_j} : i < j) with its primary components
/// q_i = (t_1, ..., t_{i-1}, t_{i+1}^{d_{i+1}}, ..., t_s^{d_s}). The closed
/// degree is checked against the Hilbert series of L and against the sum of
/// the degrees of the q_i.
inline LIdeal l_ideal(const Exps& d) {
  detail::require_sizes(d, "l_ideal");
  const std::size_t s = d.size();
  LIdeal L;
  L.d = d;
  std::vector<Monomial> g;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      Monomial m(s);
      m.set(i, 1);
      m.set(j, static_cast<unsigned>(d[j]));
      g.push_back(m);
    }
  L.gens = hilbert::MonomialIdeal(s, std::move(g));
  long long additive = 0;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Monomial> qg;
    for (std::size_t k = 0; k < i; ++k) qg.push_back(Monomial::variable(s, k));
    for (std::size_t k = i + 1; k < s; ++k) qg.push_back(Monomial::variable(s, k, static_cast<unsigned>(d[k])));
    hilbert::MonomialIdeal q(s, std::move(qg));
    const auto hq = hilbert::dim_degree(q);
    if (hq.dim != 1) throw std::logic_error("l_ideal: primary component of the wrong height");
    additive += hq.degree;
    L.components.push_back(std::move(q));
  }
  L.degree = closed_deg(d);
  const auto hd = hilbert::dim_degree(L.gens);
  if (hd.dim != 1 || hd.degree != L.degree || additive != L.degree)
    throw std::logic_error("l_ideal: degree cross-check failed");
  return L;
}

/// deg S/(L, t^a) by the four-case formula (r = first nonzero index).
inline long long deg_l_plus_monomial(const Exps& d, const Exps& a) {
  const std::size_t r = detail::check_standard(d, a, "deg_l_plus_monomial");
  const std::size_t s = d.size();
  const long long deg = closed_deg(d);
  const long long ar = a[r - 1], dr = d[r - 1];
  if (r == s) {
    if (ar <= dr) {
      long long sum = 0;
      for (std::size_t i = 2; i <= s; ++i) sum += detail::tail_product(d, a, i);
      return deg - sum - 1;
    }
    return deg - 1;
  }
  if (ar <= dr) {
    long long sum = 0;
    for (std::size_t i = 2; i <= r + 1; ++i) sum += detail::tail_product(d, a, i);
    return deg - sum;
  }
  return deg - detail::tail_product(d, a, r + 1);
}

/// The same degree from the Hilbert series of L + (t^a).
inline long long deg_l_plus_monomial_engine(const Exps& d, const Exps& a) {
  detail::check_standard(d, a, "deg_l_plus_monomial_engine");
  Monomial m(d.size());
  for (std::size_t i = 0; i < a.size(); ++i) m.set(i, static_cast<unsigned>(a[i]));
  return hilbert::dim_degree(l_ideal(d).gens.plus(m)).degree;
}

/// Upper bound for |V_X(f)| when in(f) = t^a under lex t_1 < ... < t_s, in
/// the two-case form with (d_i - a_i)...(d_s - a_s) = 1 for i > s.
inline long long zeros_upper_bound(const Exps& d, const Exps& a) {
  const std::size_t r = detail::check_standard(d, a, "zeros_upper_bound");
  const long long deg = closed_deg(d);
  if (a[r - 1] <= d[r - 1]) {
    long long sum = 0;
    for (std::size_t i = 2; i <= r + 1; ++i) sum += detail::tail_product(d, a, i);
    return deg - sum;
  }
  return deg - detail::tail_product(d, a, r + 1);
}

struct KEll {
  long long k = 0;
  long long ell = 0;
};

struct ConjectureValue {
  std::optional<KEll> decomposition;  // empty in the saturated range
  long long value = 1;
};

/// Conjectured delta_X(d): with d = sum_{i=2}^{k+1} (d_i - 1) + ell and
/// 1 <= ell <= d_{k+2} - 1 the value is (d_{k+2} - ell + 1) d_{k+3} ... d_s;
/// it is 1 once d exceeds sum_{i=2}^s (d_i - 1).
inline ConjectureValue conjecture_delta(const Exps& d, long long deg) {
  detail::require_sizes(d, "conjecture_delta");
  if (deg < 1) throw PreconditionError("conjecture_delta: degree must be positive");
  const std::size_t s = d.size();
  long long acc = 0;  // sum_{i=2}^{k+1} (d_i - 1)
  for (std::size_t k = 0; k + 2 <= s; ++k) {
    const long long dk2 = d[k + 1];  // d_{k+2}
    if (deg <= acc + dk2 - 1) {
      const long long ell = deg - acc;
      long long v = dk2 - ell + 1;
      for (std::size_t i = k + 3; i <= s; ++i) v *= d[i - 1];
      return {KEll{static_cast<long long>(k), ell}, v};
    }
    acc += dk2 - 1;
  }
  return {std::nullopt, 1};
}

/// Checks the product inequality for one admissible instance. Without b_0:
///   prod (e_i - b_i) >= (sum_{i<=k} (e_i - b_i) - (k-1) - sum_{i>k} b_i) e_{k+1}...e_m,  1 <= k <= m.
/// With b_0 >= 1:
///   prod (e_i - b_i) >= (sum_{i<=k+1} (e_i - b_i) - (k-1) - b_0 - sum_{i>=k+2} b_i) e_{k+2}...e_m,  0 <= k <= m-1.
inline bool ineq_oracle(const Exps& e, const Exps& b, long long k, std::optional<long long> b0 = std::nullopt) {
  const long long m = static_cast<long long>(e.size());
  if (m < 1 || b.size() != e.size()) throw PreconditionError("ineq_oracle: bad lengths");
  if (e[0] < 1) throw PreconditionError("ineq_oracle: need e_1 >= 1");
  for (long long i = 0; i < m; ++i) {
    if (i + 1 < m && e[i] > e[i + 1]) throw PreconditionError("ineq_oracle: e must be non-decreasing");
    if (b[i] < 0 || b[i] > e[i] - 1) throw PreconditionError("ineq_oracle: need 0 <= b_i <= e_i - 1");
  }
  long long lhs = 1;
  for (long long i = 0; i < m; ++i) lhs *= e[i] - b[i];
  // 1-based helpers
  auto E = [&](long long i) { return e[i - 1]; };
  auto B = [&](long long i) { return b[i - 1]; };
  long long head = 0, tail = 0, prod = 1;
  if (!b0) {
    if (k < 1 || k > m) throw PreconditionError("ineq_oracle: need 1 <= k <= m");
    for (long long i = 1; i <= k; ++i) head += E(i) - B(i);
    for (long long i = k + 1; i <= m; ++i) {
      tail += B(i);
      prod *= E(i);
    }
    return lhs >= (head - (k - 1) - tail) * prod;
  }
  if (*b0 < 1) throw PreconditionError("ineq_oracle: need b_0 >= 1");
  if (k < 0 || k > m - 1) throw PreconditionError("ineq_oracle: need 0 <= k <= m - 1");
  for (long long i = 1; i <= k + 1; ++i) head += E(i) - B(i);
  for (long long i = k + 2; i <= m; ++i) {
    tail += B(i);
    prod *= E(i);
  }
  return lhs >= (head - (k - 1) - *b0 - tail) * prod;
}

struct SliceMax {
  long long max_zeros = 0;
  long long closed_form = 0;  // deg - (d_{k+2} - ell + 1) d_{k+3} ... d_s
  std::optional<Polynomial> witness;
};

/// max |V_X(f)| over f in the span of the degree-d monomials divisible by
/// t_1 with f not vanishing on all of X; requires 1 <= d <= sum_{i>=2}(d_i - 1).
inline SliceMax max_zeros_t1_slice(const CartesianSpec& spec, int d, const search::Options& opt = {}) {
  if (!validate_nested(spec).ok()) throw PreconditionError("max_zeros_t1_slice: spec is not nested");
  const auto dv = spec.sizes();
  const auto conj = conjecture_delta(dv, std::max(d, 1));
  if (d < 1 || !conj.decomposition) throw PreconditionError("max_zeros_t1_slice: degree outside 1..sum(d_i - 1)");
  const auto X = cartesian_points(spec);
  const std::size_t s = spec.s();
  std::vector<Monomial> mons;
  for (const auto& m : monomials_of_degree(s, static_cast<unsigned>(d)))
    if (m[0] > 0) mons.push_back(m);
  linalg::Matrix M;
  for (const auto& m : mons) M.push_back(evaluation_row(X, m));
  SliceMax out;
  out.closed_form = closed_deg(dv) - conj.value;
  const auto best = mindist::detail::max_zero_count(*spec.field, M, opt, "max_zeros_t1_slice");
  if (!best.score) throw std::logic_error("max_zeros_t1_slice: every candidate vanishes on X");
  out.max_zeros = *best.score;
  out.witness = mindist::detail::combination(spec.field, s, mons, search::vector_at(spec.field->q(), mons.size(), best.index));
  return out;
}

}  // namespace mindist::cartesian

#endif  // MINDIST_CARTESIAN_HPP
