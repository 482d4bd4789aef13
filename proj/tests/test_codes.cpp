#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mindist/codes.hpp"

using namespace mindist;

namespace {

Polynomial P(const std::string& s, const gf::FieldPtr& F, std::size_t n) { return parse_polynomial(s, F, n); }

GroebnerBasis gb(const gf::FieldPtr& F, std::size_t n, const std::vector<std::string>& gens,
                 const MonomialOrder& ord) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(g, F, n));
  return buchberger(Ideal(F, n, ps), ord);
}

PointSet random_points(std::mt19937& rng, const gf::FieldPtr& F, std::size_t s, std::size_t count) {
  auto all = enumerate_full(F, s).points();
  std::shuffle(all.begin(), all.end(), rng);
  all.erase(all.begin() + static_cast<std::ptrdiff_t>(std::min(count, all.size())), all.end());
  return PointSet(F, s, all);
}

// Minimum weight over every nonzero coefficient vector, without projective
// pruning or incremental updates.
long long naive_min_weight(const EvaluationCode& C) {
  const auto& F = *C.X.field();
  const std::size_t n = C.dimension(), m = C.length();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= F.q();
  long long best = -1;
  for (std::uint64_t x = 1; x < total; ++x) {
    std::vector<gf::Elem> v(n);
    auto y = x;
    for (auto& c : v) c = static_cast<gf::Elem>(y % F.q()), y /= F.q();
    long long w = 0;
    for (std::size_t k = 0; k < m; ++k) {
      gf::Elem a = 0;
      for (std::size_t i = 0; i < n; ++i) a = F.add(a, F.mul(v[i], C.matrix[i][k]));
      w += a != 0;
    }
    if (w > 0 && (best < 0 || w < best)) best = w;
  }
  return best;
}

}  // namespace

TEST(Search, WalkVisitsNormalizedVectorsInIndexOrder) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u})
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto total = search::projective_count(q, n);
      std::vector<gf::Elem> state(n, 0);
      std::uint64_t expect = 0;
      std::set<std::vector<gf::Elem>> seen;
      search::walk(
          q, n, 0, total, [&](std::size_t i, gf::Elem old, gf::Elem now) {
            ASSERT_EQ(state[i], old);
            state[i] = now;
          },
          [&](std::uint64_t idx, const std::vector<gf::Elem>& v) {
            ASSERT_EQ(idx, expect++);
            ASSERT_EQ(v, state);
            ASSERT_EQ(v, search::vector_at(q, n, idx));
            std::size_t top = n;
            while (top-- > 0 && v[top] == 0) {
            }
            ASSERT_LT(top, n);
            ASSERT_EQ(v[top], 1u);
            seen.insert(v);
          });
      EXPECT_EQ(expect, total);
      EXPECT_EQ(seen.size(), total);
      // a sub-range starts from the right state
      if (total > 3) {
        std::vector<std::uint64_t> got;
        search::walk(q, n, 2, total, [](std::size_t, gf::Elem, gf::Elem) {},
                     [&](std::uint64_t idx, const std::vector<gf::Elem>&) { got.push_back(idx); });
        EXPECT_EQ(got.size(), total - 2);
      }
    }
  EXPECT_EQ(search::vector_at(3, 3, 0), (std::vector<gf::Elem>{1, 0, 0}));
  EXPECT_EQ(search::vector_at(3, 3, 1), (std::vector<gf::Elem>{0, 1, 0}));
  EXPECT_EQ(search::vector_at(3, 3, 4), (std::vector<gf::Elem>{0, 0, 1}));
  EXPECT_THROW(search::vector_at(3, 3, 13), std::out_of_range);
}

TEST(Search, BudgetAndParallelDeterminism) {
  EXPECT_NO_THROW(search::check_budget("x", 3, 9, 19682));
  EXPECT_THROW(search::check_budget("x", 3, 9, 19681), BudgetExceeded);
  EXPECT_THROW(search::check_budget("x", 4, 40, search::kDefaultBudget), BudgetExceeded);

  // Scores with many ties: the reduction must keep the smallest index.
  struct W {
    void set(std::size_t, gf::Elem, gf::Elem) {}
    std::optional<long long> score(std::uint64_t idx, const std::vector<gf::Elem>&) const {
      return static_cast<long long>(idx % 7);
    }
  };
  for (unsigned jobs : {1u, 2u, 3u, 8u}) {
    search::Options opt{search::kDefaultBudget, jobs};
    const auto b = search::maximize(3, 6, opt, "t", [] { return W{}; });
    ASSERT_TRUE(b.score);
    EXPECT_EQ(*b.score, 6);
    EXPECT_EQ(b.index, 6u);
  }
}

TEST(Codes, BruteForceMatchesNaiveEnumeration) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    auto F = trial % 2 ? gf::Field::make(3) : gf::Field::make(2);
    auto X = random_points(rng, F, 2 + trial % 2, 2 + rng() % 6);
    auto G = vanishing_ideal_points(X, canonical_order(X.arity()));
    for (int d = 1; d <= 3; ++d) {
      auto C = build_code(X, G, d);
      if (search::pow_sat(F->q(), C.dimension()) > 20000) continue;
      const auto r = min_distance_bruteforce(C);
      EXPECT_EQ(*r.delta, naive_min_weight(C));
      ASSERT_TRUE(r.witness);
      EXPECT_EQ(static_cast<long long>(X.size() - count_zeros(X, *r.witness)), *r.delta);
      const auto r2 = min_distance_bruteforce(C, {search::kDefaultBudget, 3});
      EXPECT_EQ(r2.delta, r.delta);
      EXPECT_EQ(*r2.witness, *r.witness);
    }
  }
}

TEST(Codes, Example71) {
  auto F3 = gf::Field::make(3);
  auto X = PointSet::from_raw(F3, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                                      {1, 2, 2, 1}, {1, 1, 1, 1}, {2, 2, 1, 1}, {2, 1, 2, 1}});
  auto G = vanishing_ideal_points(X, canonical_order(4));
  auto rows = params_table(X, G, 3, Method::All);
  const std::vector<long long> delta = {4, 2, 1}, fp = {2, 1, 1};
  const std::vector<std::size_t> H = {4, 7, 8};
  for (int d = 1; d <= 3; ++d) {
    const auto& r = rows[d - 1];
    EXPECT_EQ(*r.delta, delta[d - 1]);
    EXPECT_EQ(r.dimension, H[d - 1]);
    EXPECT_EQ(*r.fp, fp[d - 1]);
    EXPECT_LE(*r.delta, r.singleton);
  }
  EXPECT_EQ(rows[2].method, "reg");
  EXPECT_EQ(count_zeros(X, *rows[2].witness), 7u);
  // delta_graded via the Hilbert-series test and via the colon agree
  for (int d = 1; d <= 2; ++d) EXPECT_EQ(delta_graded(G, d).delta, delta_colon(G, d).delta);
}

TEST(Codes, Example73NegativeFootprint) {
  auto F3 = gf::Field::make(3);
  auto G = gb(F3, 3, {"t1^2 - t3^2", "t2^2 - t3^2"}, MonomialOrder::lex(natural_priority(3)));
  EXPECT_EQ(fp_bound(G, 1), 0);
  EXPECT_EQ(fp_bound(G, 2), -4);
  EXPECT_EQ(*delta_graded(G, 1).delta, 2);
  EXPECT_EQ(*delta_graded(G, 2).delta, 1);
  EXPECT_EQ(*delta_colon(G, 1).delta, 2);
}

TEST(Codes, Example75MonomialIdeal) {
  auto F5 = gf::Field::make(5);
  auto G = gb(F5, 2, {"t1^7", "t2^5", "t1^2*t2", "t1*t2^3"}, canonical_order(2));
  const std::vector<long long> delta = {6, 2, 1, 1, 2, 1};
  auto rows = ideal_table(G, 7, Method::Degree);
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(*rows[d - 1].delta, delta[d - 1]) << "d=" << d;
  EXPECT_TRUE(rows[6].fd_empty);
  EXPECT_EQ(*rows[6].delta, 13);
  EXPECT_THROW(ideal_table(G, 3, Method::Brute), PreconditionError);
  EXPECT_THROW(delta_colon(G, 7), PreconditionError);
}

TEST(Codes, OracleEquivalenceOnRandomPointSets) {
  std::mt19937 rng(7);
  int cases = 0;
  for (int trial = 0; trial < 24; ++trial) {
    auto F = trial % 2 ? gf::Field::make(3) : gf::Field::make(2);
    const std::size_t s = 2 + trial % 2;
    auto X = random_points(rng, F, s, 2 + rng() % 5);
    if (X.size() < 2) continue;
    auto G = vanishing_ideal_points(X, canonical_order(s));
    const unsigned reg = regularity_points(G);
    for (int d = 1; d <= static_cast<int>(reg); ++d) {
      const auto H = hilbert::hilbert_function(G.initial_ideal(), d);
      if (search::pow_sat(F->q(), H) > 729) continue;
      const auto b = min_distance_bruteforce(build_code(X, G, d));
      const auto z = delta_via_zeros(X, G, d);
      const auto g = delta_graded(G, d);
      const auto c = delta_colon(G, d);
      ASSERT_EQ(b.delta, z.delta);
      ASSERT_EQ(b.delta, g.delta);
      ASSERT_EQ(b.delta, c.delta);
      ++cases;
    }
  }
  EXPECT_GE(cases, 20);
}

TEST(Codes, SubsetUpperBound) {
  auto F3 = gf::Field::make(3);
  auto G = gb(F3, 3, {"t1^2 - t3^2", "t2^2 - t3^2"}, canonical_order(3));
  for (int d = 1; d <= 2; ++d) EXPECT_GE(*delta_upper_subset(G, d).delta, *delta_graded(G, d).delta);
}

TEST(Codes, IndicatorAndRegularityRows) {
  auto F3 = gf::Field::make(3);
  auto X = PointSet::from_raw(F3, 3, {{1, 1, 1}, {1, 2, 0}, {1, 0, 2}, {0, 1, 2}, {1, 0, 0}});
  auto G = vanishing_ideal_points(X, canonical_order(3));
  EXPECT_EQ(regularity_points(G), 3u);
  const auto f = indicator_polynomial(X, G, 3);
  EXPECT_EQ(count_zeros(X, f), 4u);
  EXPECT_NE(evaluate(f, X[0]), 0u);
  EXPECT_THROW(indicator_polynomial(X, G, 1), PreconditionError);
  auto r = min_distance_bruteforce(build_code(X, G, 1));
  EXPECT_EQ(*r.delta, 1);
  EXPECT_EQ(*r.witness, P("t1 + t2 + t3", F3, 3));
}

TEST(Codes, DeltaDecreasesStrictlyToOne) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    auto F = trial % 3 ? gf::Field::make(3) : gf::Field::make(2);
    auto X = random_points(rng, F, 3, 3 + rng() % 5);
    auto G = vanishing_ideal_points(X, canonical_order(3));
    const int reg = static_cast<int>(regularity_points(G));
    auto rows = params_table(X, G, reg + 1, Method::Brute);
    long long prev = static_cast<long long>(X.size()) + 1;
    for (const auto& r : rows) {
      ASSERT_FALSE(r.skipped);
      if (prev > 1) EXPECT_LT(*r.delta, prev);
      else EXPECT_EQ(*r.delta, 1);
      EXPECT_LE(*r.delta, r.singleton);
      EXPECT_LE(*r.fp, *r.delta);
      prev = *r.delta;
    }
    EXPECT_EQ(prev, 1);
  }
}

TEST(Codes, SkippedRowsAndErrors) {
  auto F4 = gf::Field::make(2, 2);
  auto X = enumerate_full(F4, 3);
  auto G = vanishing_ideal_points(X, canonical_order(3));
  auto rows = params_table(X, G, 2, Method::Brute, {1000, 1});
  EXPECT_FALSE(rows[0].skipped);
  EXPECT_EQ(*rows[0].delta, 16);
  EXPECT_TRUE(rows[1].skipped);
  EXPECT_FALSE(rows[1].delta);
  EXPECT_TRUE(rows[1].fp);
  EXPECT_EQ(parse_method("all"), Method::All);
  EXPECT_THROW(parse_method("fast"), ParseError);
  auto F3 = gf::Field::make(3);
  auto Gn = gb(F3, 2, {"t1^2 - t2"}, MonomialOrder::lex(2));
  EXPECT_THROW(delta_graded(Gn, 1), PreconditionError);
  EXPECT_THROW(fp_bound(gb(F3, 2, {"t1", "1"}, MonomialOrder::lex(2)), 1), PreconditionError);
}
