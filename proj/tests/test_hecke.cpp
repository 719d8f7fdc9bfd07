#include <gtest/gtest.h>

#include "etaforms/hecke.hpp"
#include "etaforms/qseries.hpp"
#include "oracles.hpp"

using namespace etaforms;
using namespace etaforms::constants;

namespace {

// Coefficient formula of T_p spelled out on integer vectors.
std::vector<i64> naive_Tp(const std::vector<i64>& h, i64 d, i64 p) {
  const int out = static_cast<int>((h.size() - 1) / p);
  const int chi = p == 2 ? (d % 8 == -7 || d % 8 == 1 ? 1 : (d % 2 == 0 ? 0 : -1)) : oracle::legendre(d, p);
  std::vector<i64> r(out + 1, 0);
  for (int n = 0; n <= out; ++n) {
    r[n] = h[n * p];
    if (n % p == 0) r[n] += chi * h[n / p];
  }
  return r;
}

QSeries B(const Form& F, int order) { return QSeries::from_integers(oracle::theta(F, order)); }

}  // namespace

TEST(Hecke, ThetaImagesAtTwo) {
  const QSeries lhs = apply_Tp(theta_form({1, 1, 12}, 600), -47, 2);
  EXPECT_EQ(lhs.order(), 300);
  EXPECT_FALSE(first_difference(lhs, B({2, 1, 6}, 300) * Rational(2)));
  EXPECT_FALSE(first_difference(apply_Tp(theta_form({1, 0, 162}, 600), -648, 2), B({2, 0, 81}, 300)));
}

TEST(Hecke, MatchesCoefficientFormula) {
  for (const auto& [d, F] : std::vector<std::pair<i64, Form>>{
           {-47, {2, 1, 6}}, {-71, {3, 1, 6}}, {-135, {5, 5, 8}}, {-1024, {13, 4, 20}}, {-1872, {11, 8, 44}}}) {
    const auto h = oracle::theta(F, 900);
    for (i64 p : oracle::primes(30)) {
      const QSeries got = apply_Tp(QSeries::from_integers(h), d, p);
      const auto want = naive_Tp(h, d, p);
      ASSERT_EQ(got.order() + 1, static_cast<int>(want.size()));
      for (int n = 0; n <= got.order(); ++n) ASSERT_EQ(got[n].as_integer(), want[n]) << d << " " << p << " " << n;
    }
  }
}

TEST(Hecke, Linear) {
  const QSeries x = theta_form({2, 1, 6}, 500), y = theta_form({3, -1, 4}, 500);
  for (i64 p : {2, 3, 5, 7, 47, 53}) {
    const QSeries lhs = apply_Tp(x * sqrt5() + y * Rational(3, 2), -47, p);
    const QSeries rhs = apply_Tp(x, -47, p) * sqrt5() + apply_Tp(y, -47, p) * Rational(3, 2);
    EXPECT_FALSE(first_difference(lhs, rhs)) << p;
  }
}

TEST(Hecke, Errors) {
  const QSeries s = theta_form({1, 1, 12}, 20);
  EXPECT_THROW(apply_Tp(s, -47, 4), std::invalid_argument);
  EXPECT_THROW(apply_Tp(s, -47, 23), std::invalid_argument);
  EXPECT_THROW(eigen_check(QSeries(FieldLabel::Rational, 20), -47, 2), std::domain_error);
}

TEST(Hecke, EigenCheck) {
  // With one class the theta series is an Eisenstein series, eigenvalue 1 + (d/p).
  const QSeries t = theta_form({1, 1, 1}, 600);
  for (i64 p : {2, 5, 7, 13}) {
    const auto lam = eigen_check(t, -3, p);
    ASSERT_TRUE(lam);
    EXPECT_EQ(*lam, FieldElement::integer(FieldLabel::Rational, 1 + kronecker(-3, p))) << p;
  }
  EXPECT_FALSE(eigen_check(theta_form({2, 1, 6}, 600), -47, 2));
}

TEST(CoeffRecursion, Examples) {
  const auto R = [](i64 v) { return FieldElement::integer(FieldLabel::Rational, v); };
  EXPECT_EQ(coeff_recursion(R(2), 1, 3), R(4));
  EXPECT_EQ(coeff_recursion(R(0), -1, 4), R(1));
  EXPECT_EQ(coeff_recursion(-mu(), 1, 2), mu());
  EXPECT_EQ(coeff_recursion(R(7), 0, 5), R(16807));
  EXPECT_EQ(coeff_recursion(R(5), 1, 0), R(1));
  EXPECT_THROW(coeff_recursion(R(1), 2, 1), std::invalid_argument);
  EXPECT_THROW(coeff_recursion(R(1), 1, -1), std::invalid_argument);
}

TEST(CoeffRecursion, MatchesTwoByTwoMatrixPower) {
  // h(p^k) is the top-left entry of [[h, -chi],[1, 0]]^k.
  for (int chi : {-1, 0, 1})
    for (i64 h = -3; h <= 3; ++h) {
      i64 m[2][2] = {{1, 0}, {0, 1}};
      for (int k = 0; k <= 12; ++k) {
        ASSERT_EQ(coeff_recursion(FieldElement::integer(FieldLabel::Rational, h), chi, k),
                  FieldElement::integer(FieldLabel::Rational, m[0][0]));
        const i64 a = m[0][0] * h + m[0][1], b = -chi * m[0][0];
        const i64 c = m[1][0] * h + m[1][1], e = -chi * m[1][0];
        m[0][0] = a, m[0][1] = b, m[1][0] = c, m[1][1] = e;
      }
    }
}
