#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "etaforms/ntheory.hpp"

namespace etaforms {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// The four real fields the eigenvalues live in. The power basis generator
/// theta is lambda = (1+sqrt5)/2 for Sqrt5, sqrt2 for Sqrt2 and
/// alpha = 2cos(2pi/7) for Cos7.
enum class FieldLabel { Rational, Sqrt5, Sqrt2, Cos7 };

struct NumberField {
  FieldLabel label;
  int degree;
  std::array<i64, 4> min_poly;  // ascending, monic
  const char* name;
  const char* generator;
};

const NumberField& number_field(FieldLabel label);
std::string field_name(FieldLabel label);

/// Exact element of one of the enumerated fields, stored as rational
/// coordinates w.r.t. 1, theta, theta^2.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(FieldLabel field) : field_(field) {}
  FieldElement(FieldLabel field, const Rational& r) : field_(field) { c_[0] = r; }
  FieldElement(FieldLabel field, std::initializer_list<Rational> coords);

  static FieldElement integer(FieldLabel field, i64 n) { return {field, Rational(n)}; }
  static FieldElement generator(FieldLabel field);

  FieldLabel field() const { return field_; }
  int degree() const { return number_field(field_).degree; }

  /// Coordinate w.r.t. the power basis. Throws std::out_of_range on a bad index.
  const Rational& coordinate(int i) const;

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws std::domain_error if not rational.
  const Rational& as_rational() const;
  /// The integer value; throws std::domain_error if not a rational integer.
  BigInt as_integer() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const Rational& r);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Rational& r) { return a *= r; }
  friend FieldElement operator*(const Rational& r, FieldElement a) { return a *= r; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(int k) const;  // negative k allowed for nonzero elements

  /// Generator of the Galois group: lambda <-> mu, sqrt2 -> -sqrt2,
  /// alpha -> beta -> gamma -> alpha. Identity on Rational.
  FieldElement sigma() const;
  FieldElement norm() const;

  /// Same element viewed in a larger field (only Rational promotes).
  FieldElement promoted(FieldLabel target) const;

  std::string to_string() const;

 private:
  FieldLabel field_ = FieldLabel::Rational;
  std::array<Rational, 3> c_{};
};

FieldElement promote_common(const FieldElement& x, FieldLabel target);
/// The field both operands can be expressed in; throws std::invalid_argument on mismatch.
FieldLabel common_field(FieldLabel a, FieldLabel b);

/// Images of x under each field automorphism: {x, sigma(x), sigma^2(x), ...}.
std::vector<FieldElement> fe_conjugates(const FieldElement& x);
FieldElement fe_arith(const FieldElement& x, const FieldElement& y, char op);
Rational fe_coordinate(const FieldElement& x, int i);

namespace constants {
FieldElement lambda();  // (1+sqrt5)/2
FieldElement mu();      // (1-sqrt5)/2
FieldElement sqrt5();
FieldElement sqrt2();
FieldElement alpha();  // 2cos(2pi/7)
FieldElement beta();   // 2cos(4pi/7)
FieldElement gamma();  // 2cos(6pi/7)
}  // namespace constants

std::string to_string(const Rational& r);

}  // namespace etaforms
