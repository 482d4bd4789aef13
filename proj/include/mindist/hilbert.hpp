#ifndef MINDIST_HILBERT_HPP
#define MINDIST_HILBERT_HPP

// Combinatorics of monomial ideals: standard monomials per degree, the
// Hilbert series numerator, Krull dimension, degree and regularity.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mindist/errors.hpp"
#include "mindist/monomial.hpp"

namespace mindist::hilbert {

/// Monomial ideal stored by its minimal generators (sorted canonically).
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const auto& g : gens)
      if (g.size() != nvars) throw std::invalid_argument("monomial ideal: generator arity mismatch");
    // Keep a generator unless a different one divides it (first copy of duplicates wins).
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
    });
    for (const auto& g : gens) {
      bool redundant = false;
      for (const auto& h : gens_)
        if (h.divides(g)) {
          redundant = true;
          break;
        }
      if (!redundant) gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end());
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const noexcept {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  /// M + (m)
  MonomialIdeal plus(const Monomial& m) const {
    auto g = gens_;
    g.push_back(m);
    return MonomialIdeal(nvars_, std::move(g));
  }

  /// (M : m)
  MonomialIdeal colon(const Monomial& m) const {
    std::vector<Monomial> g;
    g.reserve(gens_.size());
    for (const auto& x : gens_) g.push_back(x / gcd(x, m));
    return MonomialIdeal(nvars_, std::move(g));
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].to_string();
    }
    return s + ")";
  }

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Integer polynomial, coefficient i is the coefficient of t^i.
using IntPoly = std::vector<long long>;

struct HilbertData {
  IntPoly numerator;  // HS(S/M) = numerator / (1-t)^s
  IntPoly reduced;    // HS(S/M) = reduced / (1-t)^dim, reduced(1) != 0
  std::size_t dim = 0;
  long long degree = 0;
};

/// Degree-d standard monomials (not in M), ascending in the canonical order.
inline std::vector<Monomial> footprint_slice(const MonomialIdeal& M, int d) {
  if (d < 0) throw PreconditionError("footprint_slice: negative degree");
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(M.nvars(), static_cast<unsigned>(d)))
    if (!M.contains(m)) out.push_back(m);
  return out;
}

inline std::size_t hilbert_function(const MonomialIdeal& M, int d) {
  if (d < 0) throw PreconditionError("hilbert_function: negative degree");
  std::size_t n = 0;
  for (auto& m : monomials_of_degree(M.nvars(), static_cast<unsigned>(d)))
    if (!M.contains(m)) ++n;
  return n;
}

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline IntPoly add(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline IntPoly numerator_rec(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.is_one()) return {};  // unit ideal: zero series
  // Pairwise coprime generators: product of (1 - t^deg).
  std::vector<unsigned> count(nvars, 0);
  bool coprime_all = true;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < nvars; ++i)
      if (g[i] != 0 && ++count[i] > 1) coprime_all = false;
  if (coprime_all) {
    IntPoly r{1};
    for (const auto& g : gens) {
      IntPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      r = mul(r, f);
    }
    return r;
  }
  // Pivot: the variable occurring in the most generators (lowest index on ties).
  std::size_t v = 0;
  for (std::size_t i = 1; i < nvars; ++i)
    if (count[i] > count[v]) v = i;
  const Monomial x = Monomial::variable(nvars, v);
  // HS(S/M) = HS(S/(M + (x))) + t * HS(S/(M : x))
  std::vector<Monomial> plus{x}, colon;
  for (const auto& g : gens) {
    if (g[v] == 0) plus.push_back(g);
    colon.push_back(g / gcd(g, x));
  }
  MonomialIdeal mp(nvars, std::move(plus)), mc(nvars, std::move(colon));
  IntPoly a = numerator_rec(mp.generators(), nvars);
  IntPoly b = numerator_rec(mc.generators(), nvars);
  b.insert(b.begin(), 0);
  trim(b);
  return add(std::move(a), b);
}

}  // namespace detail

/// Numerator h(t) with HS(S/M) = h(t) / (1-t)^s.
inline IntPoly hilbert_numerator(const MonomialIdeal& M) {
  return detail::numerator_rec(M.generators(), M.nvars());
}

inline long long eval_at_one(const IntPoly& p) {
  long long s = 0;
  for (auto c : p) s += c;
  return s;
}

inline HilbertData dim_degree(const MonomialIdeal& M) {
  if (M.is_unit()) throw PreconditionError("dim_degree: unit ideal");
  HilbertData hd;
  hd.numerator = hilbert_numerator(M);
  IntPoly g = hd.numerator;
  std::size_t mult = 0;
  while (!g.empty() && eval_at_one(g) == 0) {
    // Exact division by (1 - t): q_i = sum_{j<=i} g_j.
    IntPoly q(g.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      acc += g[i];
      q[i] = acc;
    }
    g = std::move(q);
    detail::trim(g);
    ++mult;
  }
  hd.reduced = g;
  hd.dim = M.nvars() - mult;
  hd.degree = eval_at_one(g);
  if (hd.degree < 1) throw std::logic_error("dim_degree: non-positive degree");
  return hd;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Coefficient of t^d in h(t) / (1-t)^s.
inline long long series_coefficient(const IntPoly& h, std::size_t s, int d) {
  long long sum = 0;
  for (std::size_t i = 0; i < h.size() && static_cast<int>(i) <= d; ++i) {
    long long n = d - static_cast<long long>(i);
    sum += h[i] * (s == 0 ? (n == 0 ? 1 : 0) : binomial(n + static_cast<long long>(s) - 1, static_cast<long long>(s) - 1));
  }
  return sum;
}

/// Least d with no standard monomial of degree d; requires dim(S/M) = 0.
inline unsigned regularity_dim0(const MonomialIdeal& M) {
  if (M.is_unit()) return 0;
  const auto hd = dim_degree(M);
  if (hd.dim != 0) throw PreconditionError("regularity_dim0: S/M has positive dimension");
  unsigned d = 0;
  while (hilbert_function(M, static_cast<int>(d)) != 0) ++d;
  return d;
}

}  // namespace mindist::hilbert

#endif  // MINDIST_HILBERT_HPP
