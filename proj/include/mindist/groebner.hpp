#ifndef MINDIST_GROEBNER_HPP
#define MINDIST_GROEBNER_HPP

// Multivariate division and Buchberger's algorithm (normal selection
// strategy, coprime and chain criteria) producing reduced Groebner bases.

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "mindist/errors.hpp"
#include "mindist/gf.hpp"
#include "mindist/hilbert.hpp"
#include "mindist/monomial.hpp"
#include "mindist/order.hpp"
#include "mindist/polynomial.hpp"

namespace mindist {

/// Generating set of an ideal of GF(q)[t_1..t_s].
class Ideal {
 public:
  Ideal(gf::FieldPtr field, std::size_t nvars, std::vector<Polynomial> gens = {})
      : field_(std::move(field)), nvars_(nvars), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
      if (g.nvars() != nvars_) throw std::invalid_argument("ideal: generator arity mismatch");
      if (!g.field()->same_as(*field_)) throw std::invalid_argument("ideal: generator field mismatch");
    }
  }

  const gf::FieldPtr& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  bool is_graded() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
  }

  Ideal plus(const Polynomial& f) const {
    auto g = gens_;
    g.push_back(f);
    return Ideal(field_, nvars_, std::move(g));
  }

 private:
  gf::FieldPtr field_;
  std::size_t nvars_;
  std::vector<Polynomial> gens_;
};

namespace detail {

// Terms sorted ascending under a MonomialOrder: the leading term is back().
using OTerms = std::vector<Term>;

inline OTerms to_ordered(const Polynomial& f, const MonomialOrder& ord) {
  OTerms t = f.terms();
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.less(a.mono, b.mono); });
  return t;
}

inline Polynomial from_ordered(const gf::FieldPtr& field, std::size_t nvars, OTerms t) {
  return Polynomial::from_terms(field, nvars, std::move(t));
}

// a - c * m * b, everything ascending under ord.
inline OTerms sub_mul(const OTerms& a, gf::Elem c, const Monomial& m, const OTerms& b, const gf::Field& F,
                      const MonomialOrder& ord) {
  OTerms r;
  r.reserve(a.size() + b.size());
  const gf::Elem nc = F.neg(c);
  std::size_t i = 0, j = 0;
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = b[j].mono * m;
      have_bm = true;
    }
    if (j == b.size()) {
      r.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      r.push_back({bm, F.mul(nc, b[j].coeff)});
      ++j;
      have_bm = false;
      continue;
    }
    auto cmp = ord.compare(a[i].mono, bm);
    if (cmp < 0) {
      r.push_back(a[i++]);
    } else if (cmp > 0) {
      r.push_back({bm, F.mul(nc, b[j].coeff)});
      ++j;
      have_bm = false;
    } else {
      gf::Elem v = F.add(a[i].coeff, F.mul(nc, b[j].coeff));
      if (v != 0) r.push_back({bm, v});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return r;
}

// Full reduction of p by monic polynomials `basis`; returns the remainder
// (ascending). Divisors are tried in list order.
inline OTerms reduce_full(OTerms p, const std::vector<OTerms>& basis, const gf::Field& F,
                          const MonomialOrder& ord, std::size_t skip = std::numeric_limits<std::size_t>::max()) {
  OTerms rem_desc;
  while (!p.empty()) {
    const Term lt = p.back();
    const OTerms* div = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k].back().mono.divides(lt.mono)) {
        div = &basis[k];
        break;
      }
    }
    if (div) {
      p = sub_mul(p, lt.coeff, lt.mono / div->back().mono, *div, F, ord);
    } else {
      rem_desc.push_back(lt);
      p.pop_back();
    }
  }
  std::reverse(rem_desc.begin(), rem_desc.end());
  return rem_desc;
}

inline void make_monic(OTerms& p, const gf::Field& F) {
  if (p.empty()) return;
  const gf::Elem inv = F.inv(p.back().coeff);
  if (inv == 1) return;
  for (auto& t : p) t.coeff = F.mul(t.coeff, inv);
}

}  // namespace detail

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// f = sum a_i g_i + h with no term of h divisible by any in(g_i).
inline DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& ord) {
  const auto& F = f.F();
  std::vector<detail::OTerms> g;
  for (const auto& d : divisors) {
    if (d.nvars() != f.nvars()) throw std::invalid_argument("divide: arity mismatch");
    if (!d.field()->same_as(F)) throw std::invalid_argument("divide: field mismatch");
    if (d.is_zero()) throw PreconditionError("divide: zero divisor polynomial");
    g.push_back(detail::to_ordered(d, ord));
  }
  std::vector<std::vector<Term>> quot(divisors.size());
  detail::OTerms p = detail::to_ordered(f, ord);
  std::vector<Term> rem;
  while (!p.empty()) {
    const Term lt = p.back();
    bool divided = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Term& lg = g[i].back();
      if (!lg.mono.divides(lt.mono)) continue;
      const Monomial m = lt.mono / lg.mono;
      const gf::Elem c = F.div(lt.coeff, lg.coeff);
      quot[i].push_back({m, c});
      p = detail::sub_mul(p, c, m, g[i], F, ord);
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back(lt);
      p.pop_back();
    }
  }
  DivisionResult out{{}, Polynomial::from_terms(f.field(), f.nvars(), std::move(rem))};
  for (auto& q : quot) out.quotients.push_back(Polynomial::from_terms(f.field(), f.nvars(), std::move(q)));
  return out;
}

/// Reduced Groebner basis together with its order and initial ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(gf::FieldPtr field, std::size_t nvars, MonomialOrder order, std::vector<detail::OTerms> basis)
      : field_(std::move(field)), nvars_(nvars), order_(std::move(order)), ordered_(std::move(basis)),
        initial_(nvars) {
    std::vector<Monomial> lms;
    for (const auto& b : ordered_) {
      basis_.push_back(detail::from_ordered(field_, nvars_, b));
      lms.push_back(b.back().mono);
    }
    initial_ = hilbert::MonomialIdeal(nvars_, std::move(lms));
  }

  const gf::FieldPtr& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  const hilbert::MonomialIdeal& initial_ideal() const noexcept { return initial_; }
  bool is_zero_ideal() const noexcept { return basis_.empty(); }
  bool is_unit() const noexcept { return initial_.is_unit(); }

  Ideal ideal() const { return Ideal(field_, nvars_, basis_); }

  Polynomial normal_form(const Polynomial& f) const {
    if (f.nvars() != nvars_) throw std::invalid_argument("normal_form: arity mismatch");
    auto r = detail::reduce_full(detail::to_ordered(f, order_), ordered_, *field_, order_);
    return detail::from_ordered(field_, nvars_, std::move(r));
  }

  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Internal ordered representation, leading term last.
  const std::vector<detail::OTerms>& ordered() const noexcept { return ordered_; }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.basis_ == b.basis_;
  }

 private:
  gf::FieldPtr field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<detail::OTerms> ordered_;
  std::vector<Polynomial> basis_;
  hilbert::MonomialIdeal initial_;
};

namespace detail {

inline GroebnerBasis buchberger_ordered(const gf::FieldPtr& field, std::size_t nvars, std::vector<OTerms> input,
                                        const MonomialOrder& ord) {
  const auto& F = *field;
  if (ord.arity() != nvars) throw std::invalid_argument("buchberger: order arity mismatch");
  std::vector<OTerms> G;
  for (auto& p : input) {
    if (p.empty()) continue;
    make_monic(p, F);
    G.push_back(std::move(p));
  }
  auto unit = [&]() {
    OTerms one{{Monomial(nvars), 1}};
    return GroebnerBasis(field, nvars, ord, {one});
  };
  for (const auto& g : G)
    if (g.back().mono.is_one()) return unit();

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> B;
  std::vector<std::vector<char>> pending;  // pending[j][i], i < j
  auto lm = [&](std::size_t k) -> const Monomial& { return G[k].back().mono; };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending[b][a] != 0;
  };
  auto add_pairs_for = [&](std::size_t j) {
    pending.emplace_back(j, 0);
    for (std::size_t i = 0; i < j; ++i) {
      B.push_back({i, j, lcm(lm(i), lm(j))});
      pending[j][i] = 1;
    }
  };
  for (std::size_t j = 0; j < G.size(); ++j) add_pairs_for(j);

  while (!B.empty()) {
    // Normal strategy: smallest lcm (degree first, then order), stable by indices.
    std::size_t best = 0;
    for (std::size_t k = 1; k < B.size(); ++k) {
      const auto& a = B[k];
      const auto& b = B[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      auto c = ord.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::pair(a.j, a.i) < std::pair(b.j, b.i))) best = k;
    }
    const Pair pr = B[best];
    B.erase(B.begin() + static_cast<std::ptrdiff_t>(best));
    pending[pr.j][pr.i] = 0;

    if (coprime(lm(pr.i), lm(pr.j))) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || G[k].empty()) continue;
      if (lm(k).divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
    }
    if (chain) continue;

    OTerms s = sub_mul(OTerms{}, F.neg(1), pr.lcm / lm(pr.i), G[pr.i], F, ord);
    s = sub_mul(s, 1, pr.lcm / lm(pr.j), G[pr.j], F, ord);
    OTerms r = reduce_full(std::move(s), G, F, ord);
    if (r.empty()) continue;
    make_monic(r, F);
    if (r.back().mono.is_one()) return unit();
    G.push_back(std::move(r));
    add_pairs_for(G.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<OTerms> minimal;
  for (std::size_t k = 0; k < G.size(); ++k) {
    bool drop = false;
    for (std::size_t l = 0; l < G.size() && !drop; ++l) {
      if (l == k) continue;
      if (lm(l).divides(lm(k)) && (!(lm(l) == lm(k)) || l < k)) drop = true;
    }
    if (!drop) minimal.push_back(G[k]);
  }
  // Interreduce tails.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    OTerms head{minimal[k].back()};
    OTerms tail(minimal[k].begin(), minimal[k].end() - 1);
    OTerms red = reduce_full(std::move(tail), minimal, F, ord, k);
    red.push_back(head.front());
    minimal[k] = std::move(red);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const OTerms& a, const OTerms& b) { return ord.less(a.back().mono, b.back().mono); });
  return GroebnerBasis(field, nvars, ord, std::move(minimal));
}

}  // namespace detail

/// Reduced, monic Groebner basis sorted ascending by leading monomial.
inline GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& ord) {
  std::vector<detail::OTerms> in;
  for (const auto& g : I.generators()) in.push_back(detail::to_ordered(g, ord));
  return detail::buchberger_ordered(I.field(), I.nvars(), std::move(in), ord);
}

/// Groebner basis of (G, extra...) reusing an existing basis as seed.
inline GroebnerBasis extend(const GroebnerBasis& G, const std::vector<Polynomial>& extra) {
  std::vector<detail::OTerms> in = G.ordered();
  for (const auto& f : extra) in.push_back(detail::to_ordered(f, G.order()));
  return detail::buchberger_ordered(G.field(), G.nvars(), std::move(in), G.order());
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) { return G.normal_form(f); }

/// S-polynomial of two nonzero polynomials (used by tests of the
/// Buchberger postcondition).
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const Term a = f.leading_term(ord), b = g.leading_term(ord);
  const Monomial l = lcm(a.mono, b.mono);
  const auto& F = f.F();
  return f.mul_term(l / a.mono, F.inv(a.coeff)) - g.mul_term(l / b.mono, F.inv(b.coeff));
}

inline hilbert::HilbertData hilbert_data(const GroebnerBasis& G) { return hilbert::dim_degree(G.initial_ideal()); }

/// H_I(d) through the initial ideal; I must be graded.
inline std::size_t hilbert_function(const Ideal& I, int d, const MonomialOrder& ord) {
  if (!I.is_graded()) throw PreconditionError("hilbert_function: ideal has non-homogeneous generators");
  return hilbert::hilbert_function(buchberger(I, ord).initial_ideal(), d);
}

}  // namespace mindist

#endif  // MINDIST_GROEBNER_HPP
