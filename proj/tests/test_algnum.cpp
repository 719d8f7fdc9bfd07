#include <gtest/gtest.h>

#include <random>

#include "etaforms/algnum.hpp"

using namespace etaforms;
using namespace etaforms::constants;

namespace {

FieldElement I(FieldLabel f, i64 n) { return FieldElement::integer(f, n); }

FieldElement random_element(FieldLabel f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  const int deg = number_field(f).degree;
  FieldElement x(f);
  x += FieldElement::integer(f, 1) * Rational(num(rng), den(rng));
  for (int i = 1; i < deg; ++i) x += FieldElement::generator(f).pow(i) * Rational(num(rng), den(rng));
  return x;
}

// F(x) = x^3 + x^2 - 2x - 1
FieldElement cubic(const FieldElement& x) { return x * x * x + x * x - x * Rational(2) - I(FieldLabel::Cos7, 1); }

}  // namespace

TEST(Algnum, GoldenRatioExamples) {
  EXPECT_EQ(lambda() + mu(), I(FieldLabel::Sqrt5, 1));
  EXPECT_EQ(lambda() * mu(), I(FieldLabel::Sqrt5, -1));
  EXPECT_EQ(lambda() * lambda() - lambda() - I(FieldLabel::Sqrt5, 1), FieldElement(FieldLabel::Sqrt5));
  EXPECT_EQ(sqrt5(), lambda() * Rational(2) - I(FieldLabel::Sqrt5, 1));
  EXPECT_EQ(sqrt5() * sqrt5(), I(FieldLabel::Sqrt5, 5));
  EXPECT_EQ(sqrt2() * sqrt2(), I(FieldLabel::Sqrt2, 2));
}

TEST(Algnum, CubicExamples) {
  EXPECT_EQ(alpha() + beta() + gamma(), I(FieldLabel::Cos7, -1));
  EXPECT_EQ(alpha() * beta() + beta() * gamma() + gamma() * alpha(), I(FieldLabel::Cos7, -2));
  EXPECT_EQ(alpha() * beta() * gamma(), I(FieldLabel::Cos7, 1));
  for (const auto& r : {alpha(), beta(), gamma()}) EXPECT_TRUE(cubic(r).is_zero());
  EXPECT_EQ(beta(), alpha() * alpha() - I(FieldLabel::Cos7, 2));
}

TEST(Algnum, Conjugates) {
  EXPECT_EQ(alpha().sigma(), beta());
  EXPECT_EQ(beta().sigma(), gamma());
  EXPECT_EQ(gamma().sigma(), alpha());
  EXPECT_EQ(lambda().sigma(), mu());
  EXPECT_EQ(I(FieldLabel::Cos7, 1).sigma(), I(FieldLabel::Cos7, 1));
  EXPECT_EQ(fe_conjugates(I(FieldLabel::Rational, 3)).size(), 1u);
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_element(FieldLabel::Cos7, rng);
    EXPECT_EQ(x.sigma().sigma().sigma(), x);
    const auto y = random_element(FieldLabel::Sqrt5, rng);
    EXPECT_EQ(y.sigma().sigma(), y);
    const auto z = random_element(FieldLabel::Sqrt2, rng);
    EXPECT_EQ(z.sigma().sigma(), z);
    EXPECT_EQ((x * x).sigma(), x.sigma() * x.sigma());
  }
}

TEST(Algnum, Coordinates) {
  const FieldElement x = I(FieldLabel::Sqrt5, 3) + lambda() * Rational(2);
  EXPECT_EQ(fe_coordinate(x, 1), Rational(2));
  EXPECT_EQ((x - x.sigma()) / sqrt5(), I(FieldLabel::Sqrt5, 2));
  EXPECT_EQ(fe_coordinate(I(FieldLabel::Rational, 7), 0), Rational(7));
  EXPECT_EQ(fe_coordinate(sqrt2(), 1), Rational(1));
  EXPECT_THROW(fe_coordinate(sqrt2(), 2), std::out_of_range);
}

TEST(Algnum, QuadraticDifferenceHasNoRationalPart) {
  std::mt19937 rng(11);
  for (auto f : {FieldLabel::Sqrt2, FieldLabel::Sqrt5}) {
    for (int t = 0; t < 50; ++t) {
      const auto x = random_element(f, rng);
      const auto d = x - x.sigma();
      if (f == FieldLabel::Sqrt2) {
        EXPECT_EQ(fe_coordinate(d, 0), Rational(0));
        EXPECT_EQ(fe_coordinate(d, 1), 2 * fe_coordinate(x, 1));
      } else {
        // In the basis {1, lambda}: x - conj(x) = c1 * sqrt5.
        EXPECT_EQ(d, sqrt5() * Rational(fe_coordinate(x, 1)));
      }
    }
  }
}

TEST(Algnum, FieldLaws) {
  std::mt19937 rng(3);
  for (auto f : {FieldLabel::Rational, FieldLabel::Sqrt5, FieldLabel::Sqrt2, FieldLabel::Cos7}) {
    for (int t = 0; t < 40; ++t) {
      const auto a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(fe_arith(a, b, '-') + b, a);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), I(f, 1));
        EXPECT_EQ(a.pow(-2) * a.pow(3), a);
      }
    }
  }
}

TEST(Algnum, Errors) {
  EXPECT_THROW(sqrt2() + lambda(), std::invalid_argument);
  EXPECT_THROW(sqrt2().as_rational(), std::domain_error);
  EXPECT_THROW((I(FieldLabel::Rational, 1) * Rational(1, 2)).as_integer(), std::domain_error);
  EXPECT_THROW(FieldElement(FieldLabel::Cos7).inverse(), std::domain_error);
  EXPECT_EQ((I(FieldLabel::Rational, 2) + sqrt2()).field(), FieldLabel::Sqrt2);
}

TEST(Algnum, Rendering) {
  EXPECT_EQ(sqrt2().to_string(), "sqrt2");
  EXPECT_EQ(I(FieldLabel::Rational, -3).to_string(), "-3");
  EXPECT_EQ((-mu()).to_string(), "-1 + lambda");
}
