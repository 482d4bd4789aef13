#ifndef MINDIST_IDEAL_OPS_HPP
#define MINDIST_IDEAL_OPS_HPP

// Intersection, colon and elimination through block elimination orders.

#include <stdexcept>
#include <vector>

#include "mindist/groebner.hpp"

namespace mindist {

/// Canonical order used to compare ideals: grevlex with the default priority.
inline MonomialOrder canonical_order(std::size_t s) { return MonomialOrder::grevlex(s); }

/// I ∩ k[t_{k+1}, ..., t_s], as the basis elements free of the first k
/// variables under block(k, tail). The result lives in s - k variables.
inline GroebnerBasis eliminate(const Ideal& I, std::size_t k, const MonomialOrder& tail) {
  if (k > I.nvars()) throw PreconditionError("eliminate: prefix larger than the ring");
  if (tail.arity() != I.nvars() - k) throw std::invalid_argument("eliminate: tail order arity mismatch");
  const auto G = buchberger(I, MonomialOrder::block(k, tail));
  std::vector<detail::OTerms> kept;
  for (const auto& b : G.ordered()) {
    bool free = true;
    for (const auto& t : b) free = free && t.mono.free_of_prefix(k);
    if (!free) continue;
    detail::OTerms r;
    for (const auto& t : b) r.push_back({t.mono.drop_prefix(k), t.coeff});
    kept.push_back(std::move(r));
  }
  // Block order restricted to the tail is `tail`; the kept elements are
  // already reduced and sorted.
  return GroebnerBasis(I.field(), I.nvars() - k, tail, std::move(kept));
}

inline GroebnerBasis eliminate(const Ideal& I, std::size_t k) {
  return eliminate(I, k, canonical_order(I.nvars() - k));
}

/// I ∩ J via (u I + (1 - u) J) ∩ S with u an auxiliary leading variable.
inline Ideal intersect_ideals(const Ideal& I, const Ideal& J) {
  if (I.nvars() != J.nvars() || !I.field()->same_as(*J.field()))
    throw std::invalid_argument("intersect_ideals: ideals live in different rings");
  const std::size_t s = I.nvars();
  if (s + 1 > kMaxVars) throw std::length_error("intersect_ideals: no room for auxiliary variable");
  const auto& field = I.field();
  const Polynomial u = Polynomial::variable(field, s + 1, 0);
  const Polynomial one_minus_u = Polynomial::constant(field, s + 1, 1) - u;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    if (!f.is_zero()) gens.push_back(u * f.embed(s + 1, 1));
  for (const auto& g : J.generators())
    if (!g.is_zero()) gens.push_back(one_minus_u * g.embed(s + 1, 1));
  return eliminate(Ideal(field, s + 1, std::move(gens)), 1).ideal();
}

/// (I : f) = { h | h f ∈ I }, from I ∩ (f) divided exactly by f.
inline Ideal colon_ideal(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("colon_ideal: f must be nonzero");
  const auto inter = intersect_ideals(I, Ideal(I.field(), I.nvars(), {f}));
  const auto ord = canonical_order(I.nvars());
  std::vector<Polynomial> gens;
  for (const auto& g : inter.generators()) {
    auto dr = divide(g, {f}, ord);
    if (!dr.remainder.is_zero()) throw std::logic_error("colon_ideal: inexact division by f");
    gens.push_back(std::move(dr.quotients[0]));
  }
  return Ideal(I.field(), I.nvars(), std::move(gens));
}

inline bool ideals_equal(const Ideal& I, const Ideal& J) {
  const auto ord = canonical_order(I.nvars());
  return buchberger(I, ord) == buchberger(J, ord);
}

/// (I : f) != I.
inline bool is_zero_divisor(const Ideal& I, const Polynomial& f) {
  const auto ord = canonical_order(I.nvars());
  return !(buchberger(colon_ideal(I, f), ord) == buchberger(I, ord));
}

/// Same test given a reduced basis of I (any order). Since I ⊆ (I : f),
/// equality holds iff every generator of (I : f) reduces to zero.
inline bool is_zero_divisor(const GroebnerBasis& gb_of_I, const Polynomial& f) {
  const auto colon = colon_ideal(gb_of_I.ideal(), f);
  for (const auto& g : colon.generators())
    if (!gb_of_I.contains(g)) return true;
  return false;
}

/// Same test from Hilbert series, given reduced bases of I and of (I, f) for
/// f homogeneous of degree d. The exact sequence
///   0 -> S/(I : f)(-d) -> S/I -> S/(I, f) -> 0
/// and I ⊆ (I : f) give (I : f) = I iff HS(S/(I, f)) = (1 - t^d) HS(S/I).
inline bool is_zero_divisor(const GroebnerBasis& gb_of_I, const GroebnerBasis& gb_of_I_plus_f, int d) {
  if (d < 0) throw PreconditionError("is_zero_divisor: negative degree");
  const auto a = hilbert::hilbert_numerator(gb_of_I.initial_ideal());
  hilbert::IntPoly shifted(a.size() + static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    shifted[i] += a[i];
    shifted[i + static_cast<std::size_t>(d)] -= a[i];
  }
  hilbert::detail::trim(shifted);
  return hilbert::hilbert_numerator(gb_of_I_plus_f.initial_ideal()) != shifted;
}

}  // namespace mindist

#endif  // MINDIST_IDEAL_OPS_HPP
