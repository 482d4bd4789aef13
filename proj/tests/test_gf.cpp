#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "mindist/gf.hpp"

using namespace mindist;
using gf::Elem;
using gf::Field;

namespace {

// Schoolbook product of two encodings modulo the field's modulus; kept
// independent of the log tables.
Elem reference_mul(const Field& F, Elem a, Elem b) {
  const auto p = F.p(), e = F.e();
  std::vector<unsigned> da(e), db(e), prod(2 * e, 0);
  for (unsigned i = 0; i < e; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (unsigned i = 0; i < e; ++i)
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  if (e > 1) {
    const auto& m = F.modulus();
    for (unsigned i = 2 * e - 1; i >= e; --i) {
      unsigned c = prod[i];
      for (unsigned j = 0; j <= e; ++j) prod[i - e + j] = (prod[i - e + j] + (p - c) * m[j]) % p;
    }
  }
  Elem v = 0;
  for (unsigned i = e; i-- > 0;) v = v * p + prod[i];
  return v;
}

const std::vector<std::pair<unsigned, unsigned>> kSmallFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {3, 4}};

}  // namespace

TEST(Gf, PrimeFieldExamples) {
  auto F3 = Field::make(3);
  EXPECT_EQ(F3->q(), 3u);
  EXPECT_EQ(F3->add(2, 2), 1u);
  EXPECT_EQ(F3->sub(1, 2), 2u);

  auto F5 = Field::make(5);
  EXPECT_EQ(F5->inv(2), 3u);
  EXPECT_EQ(F5->pow(4, 2), 1u);
  EXPECT_EQ(F5->pow(2, -1), 3u);
}

TEST(Gf, FourElementField) {
  auto F4 = Field::make(2, 2);
  EXPECT_EQ(F4->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));  // x^2 + x + 1
  const Elem g = 2;                                                  // class of x
  EXPECT_EQ(F4->mul(g, g), 3u);                                      // g + 1
  for (Elem x = 1; x < 4; ++x) EXPECT_EQ(F4->pow(x, 3), 1u);
}

TEST(Gf, ModulusIsSmallestIrreducibleLowDegreeFirst) {
  EXPECT_EQ(Field::make(3, 2)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));     // x^2 + 1
  EXPECT_EQ(Field::make(2, 3)->modulus(), (std::vector<std::uint32_t>{1, 0, 1, 1}));  // x^3 + x^2 + 1
  EXPECT_EQ(Field::make(5, 2)->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));     // x^2 + x + 1
}

TEST(Gf, RejectsBadParameters) {
  EXPECT_THROW(Field::make(4), PreconditionError);
  EXPECT_THROW(Field::make(1), PreconditionError);
  EXPECT_THROW(Field::make(2, 17), PreconditionError);
  EXPECT_THROW(Field::make(3, 0), PreconditionError);
  EXPECT_NO_THROW(Field::make(2, 16));
  auto F5 = Field::make(5);
  EXPECT_THROW(F5->inv(0), std::domain_error);
  EXPECT_THROW(F5->div(3, 0), std::domain_error);
}

TEST(Gf, MixedFieldOperandsRejected) {
  auto F3 = Field::make(3), F5 = Field::make(5);
  gf::FieldElement a(F3, 1), b(F5, 1);
  EXPECT_THROW(a + b, std::invalid_argument);
  gf::FieldElement c(F3, 2);
  EXPECT_EQ((a - c).value(), 2u);
  EXPECT_EQ((c * c).value(), 1u);
  EXPECT_THROW(gf::FieldElement(F3, 3), std::out_of_range);
  EXPECT_THROW(a / gf::FieldElement(F3, 0), std::domain_error);
}

TEST(Gf, ParseFieldSpec) {
  EXPECT_EQ(gf::parse_field("3")->q(), 3u);
  EXPECT_EQ(gf::parse_field("2^2")->q(), 4u);
  EXPECT_EQ(gf::parse_field("4")->p(), 2u);
  EXPECT_EQ(gf::parse_field("4")->e(), 2u);
  EXPECT_EQ(gf::parse_field("27")->e(), 3u);
  EXPECT_THROW(gf::parse_field("6"), PreconditionError);
  EXPECT_THROW(gf::parse_field("x"), ParseError);
  EXPECT_THROW(gf::parse_field("2^"), ParseError);
}

TEST(Gf, MultiplicationMatchesSchoolbookExhaustively) {
  for (auto [p, e] : kSmallFields) {
    auto F = Field::make(p, e);
    for (Elem a = 0; a < F->q(); ++a)
      for (Elem b = 0; b < F->q(); ++b) ASSERT_EQ(F->mul(a, b), reference_mul(*F, a, b)) << F->name();
  }
}

TEST(Gf, FieldAxiomsExhaustive) {
  for (auto [p, e] : kSmallFields) {
    auto F = Field::make(p, e);
    const Elem q = F->q();
    for (Elem a = 0; a < q; ++a) {
      ASSERT_EQ(F->add(a, F->neg(a)), 0u);
      if (a != 0) {
        ASSERT_EQ(F->mul(a, F->inv(a)), 1u);
        ASSERT_EQ(F->pow(a, q - 1), 1u);
      }
      for (Elem b = 0; b < q; ++b) {
        ASSERT_EQ(F->add(a, b), F->add(b, a));
        ASSERT_EQ(F->mul(a, b), F->mul(b, a));
        for (Elem c = 0; c < q; ++c) {
          ASSERT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c)));
          ASSERT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
          ASSERT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
    }
  }
}

TEST(Gf, FrobeniusIsAdditiveAndBijective) {
  for (auto [p, e] : kSmallFields) {
    auto F = Field::make(p, e);
    std::set<Elem> image;
    for (Elem a = 0; a < F->q(); ++a) {
      image.insert(F->pow(a, p));
      for (Elem b = 0; b < F->q(); ++b)
        ASSERT_EQ(F->pow(F->add(a, b), p), F->add(F->pow(a, p), F->pow(b, p)));
    }
    EXPECT_EQ(image.size(), F->q());
  }
}

TEST(Gf, SubfieldElements) {
  auto F4 = Field::make(2, 2);
  EXPECT_EQ(F4->subfield_elements(1), (std::vector<Elem>{0, 1}));
  EXPECT_EQ(F4->subfield_elements(2).size(), 4u);

  auto F9 = Field::make(3, 2);
  auto sub = F9->subfield_elements(1);
  ASSERT_EQ(sub.size(), 3u);
  for (Elem x : sub) EXPECT_EQ(F9->pow(x, 3), x);

  auto F3 = Field::make(3);
  EXPECT_EQ(F3->subfield_elements(1), (std::vector<Elem>{0, 1, 2}));
  EXPECT_THROW(F9->subfield_elements(3), PreconditionError);

  for (auto [p, e] : kSmallFields) {
    auto F = Field::make(p, e);
    for (unsigned d = 1; d <= e; ++d) {
      if (e % d) continue;
      auto s = F->subfield_elements(d);
      unsigned expected = 1;
      for (unsigned i = 0; i < d; ++i) expected *= p;
      ASSERT_EQ(s.size(), expected);
      std::set<Elem> set(s.begin(), s.end());
      for (Elem a : s)
        for (Elem b : s) {
          ASSERT_TRUE(set.count(F->mul(a, b)));
          ASSERT_TRUE(set.count(F->add(a, b)));
        }
    }
  }
}
