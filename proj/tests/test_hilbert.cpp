#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "mindist/groebner.hpp"
#include "mindist/hilbert.hpp"

using namespace mindist;
using namespace mindist::hilbert;

namespace {

// Degree-d monomials in s variables by plain recursion, tested against the
// generators by componentwise comparison.
std::size_t count_standard(const std::vector<Monomial>& gens, std::size_t s, unsigned d) {
  std::vector<unsigned> e(s, 0);
  std::size_t n = 0;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == s) {
      e[i] = left;
      bool in = false;
      for (const auto& g : gens) {
        bool div = true;
        for (std::size_t k = 0; k < s; ++k) div = div && g[k] <= e[k];
        in = in || div;
      }
      n += !in;
      return;
    }
    for (unsigned x = 0; x <= left; ++x) {
      e[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, d);
  return n;
}

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t s, int ngens, unsigned maxe) {
  std::uniform_int_distribution<unsigned> ex(0, maxe);
  std::vector<Monomial> g;
  for (int k = 0; k < ngens; ++k) {
    Monomial m(s);
    for (std::size_t i = 0; i < s; ++i) m.set(i, ex(rng));
    if (!m.is_one()) g.push_back(m);
  }
  if (g.empty()) g.push_back(Monomial::variable(s, 0));
  return MonomialIdeal(s, g);
}

}  // namespace

TEST(MonomialIdeal, MinimalGenerators) {
  MonomialIdeal M(2, {Monomial{2, 0}, Monomial{3, 1}, Monomial{0, 2}, Monomial{2, 0}});
  EXPECT_EQ(M.generators().size(), 2u);
  EXPECT_TRUE(M.contains(Monomial{5, 5}));
  EXPECT_FALSE(M.contains(Monomial{1, 1}));
  EXPECT_EQ(M.colon(Monomial{1, 0}), MonomialIdeal(2, {Monomial{1, 0}, Monomial{0, 2}}));
  EXPECT_THROW(MonomialIdeal(2, {Monomial{1, 0, 0}}), std::invalid_argument);
}

TEST(Hilbert, FunctionMatchesDirectCount) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t s = 1 + trial % 4;
    auto M = random_ideal(rng, s, 1 + trial % 5, 4);
    for (unsigned d = 0; d <= 9; ++d) {
      const auto direct = count_standard(M.generators(), s, d);
      ASSERT_EQ(hilbert_function(M, static_cast<int>(d)), direct) << M.to_string() << " d=" << d;
      ASSERT_EQ(footprint_slice(M, static_cast<int>(d)).size(), direct);
      ASSERT_EQ(series_coefficient(hilbert_numerator(M), s, static_cast<int>(d)), static_cast<long long>(direct))
          << M.to_string() << " d=" << d;
    }
  }
}

TEST(Hilbert, DimensionAndDegreeFromFiniteDifferences) {
  // For d large, H(d) is a polynomial of degree dim-1 whose (dim-1)-th
  // difference is deg; in dimension 0 deg is the number of standard monomials.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t s = 2 + trial % 3;
    auto M = random_ideal(rng, s, 1 + trial % 4, 3);
    const auto hd = dim_degree(M);
    const unsigned D = 24;
    std::vector<long long> h;
    for (unsigned d = 0; d <= D; ++d) h.push_back(static_cast<long long>(count_standard(M.generators(), s, d)));
    if (hd.dim == 0) {
      long long total = 0;
      for (auto x : h) total += x;
      EXPECT_EQ(h.back(), 0);
      EXPECT_EQ(hd.degree, total);
      continue;
    }
    auto diff = h;
    for (std::size_t k = 0; k + 1 < hd.dim; ++k)
      for (std::size_t i = diff.size(); i-- > 1;) diff[i] -= diff[i - 1];
    EXPECT_EQ(diff.back(), hd.degree) << M.to_string();
    EXPECT_EQ(diff[diff.size() - 2], hd.degree) << M.to_string();
  }
}

TEST(Hilbert, ZeroDimensionalExample) {
  // (t1^7, t2^5, t1^2 t2, t1 t2^3) in two variables
  MonomialIdeal M(2, {Monomial{7, 0}, Monomial{0, 5}, Monomial{2, 1}, Monomial{1, 3}});
  const std::vector<std::size_t> H = {1, 2, 3, 3, 2, 1, 1, 0, 0};
  for (int d = 0; d < static_cast<int>(H.size()); ++d) EXPECT_EQ(hilbert_function(M, d), H[d]);
  const auto hd = dim_degree(M);
  EXPECT_EQ(hd.dim, 0u);
  EXPECT_EQ(hd.degree, 13);
  EXPECT_EQ(regularity_dim0(M), 7u);
}

TEST(Hilbert, SmallCases) {
  // S/(t1) in two variables: H = 1 everywhere, dim 1, degree 1.
  MonomialIdeal M(2, {Monomial{1, 0}});
  auto hd = dim_degree(M);
  EXPECT_EQ(hd.dim, 1u);
  EXPECT_EQ(hd.degree, 1);
  // Zero ideal: dim s, degree 1.
  hd = dim_degree(MonomialIdeal(3));
  EXPECT_EQ(hd.dim, 3u);
  EXPECT_EQ(hd.degree, 1);
  // (t1 t2) is a union of two lines: degree 2.
  EXPECT_EQ(dim_degree(MonomialIdeal(2, {Monomial{1, 1}})).degree, 2);
  EXPECT_EQ(hilbert_numerator(MonomialIdeal(2, {Monomial{1, 1}})), (IntPoly{1, 0, -1}));
}

TEST(Hilbert, Errors) {
  MonomialIdeal unit(2, {Monomial{0, 0}});
  EXPECT_TRUE(unit.is_unit());
  EXPECT_THROW(dim_degree(unit), PreconditionError);
  EXPECT_THROW(footprint_slice(MonomialIdeal(2), -1), PreconditionError);
  EXPECT_THROW(hilbert_function(MonomialIdeal(2), -1), PreconditionError);
  EXPECT_THROW(regularity_dim0(MonomialIdeal(2, {Monomial{1, 0}})), PreconditionError);
}

TEST(Hilbert, MacaulayOrderInvariance) {
  // The Hilbert function of S/I equals that of S/in(I) for every order.
  auto F3 = gf::Field::make(3);
  std::mt19937 rng(3);
  std::uniform_int_distribution<gf::Elem> c(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2 + trial % 2; ++k) {
      std::vector<Term> ts;
      for (const auto& m : monomials_of_degree(3, 2))
        if (auto x = c(rng)) ts.push_back({m, x});
      if (!ts.empty()) gens.push_back(Polynomial::from_terms(F3, 3, ts));
    }
    Ideal I(F3, 3, gens);
    std::vector<MonomialOrder> ords = {MonomialOrder::lex(3), MonomialOrder::grevlex(3),
                                       MonomialOrder::lex(natural_priority(3)),
                                       MonomialOrder::grevlex(std::vector<std::size_t>{1, 0, 2})};
    std::vector<std::size_t> ref;
    for (int d = 0; d <= 6; ++d) ref.push_back(mindist::hilbert_function(I, d, ords[0]));
    for (const auto& o : ords)
      for (int d = 0; d <= 6; ++d) EXPECT_EQ(mindist::hilbert_function(I, d, o), ref[d]) << o.name();
  }
}
