#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etaforms/algnum.hpp"
#include "etaforms/form.hpp"

namespace etaforms {

/// Truncated q-series sum_{n=0}^{order} c_n q^n with exact coefficients.
/// Reading past the truncation order is an error.
class QSeries {
 public:
  QSeries(FieldLabel field, int order);

  static QSeries from_integers(const std::vector<i64>& coeffs);
  static QSeries from_integers(const std::vector<BigInt>& coeffs);
  static QSeries one(FieldLabel field, int order);
  static QSeries monomial(const FieldElement& coeff, int exponent, int order);

  FieldLabel field() const { return field_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient of q^n; throws std::out_of_range when n > order or n < 0.
  const FieldElement& operator[](int n) const;
  const FieldElement& at(int n) const { return (*this)[n]; }
  void set(int n, const FieldElement& value);
  void add_to(int n, const FieldElement& value);

  bool is_zero() const;
  std::optional<int> first_nonzero() const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const FieldElement& s);
  QSeries& operator*=(const Rational& s);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const FieldElement& s) { return a *= s; }
  friend QSeries operator*(const FieldElement& s, QSeries a) { return a *= s; }
  friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }
  /// Cauchy product; result order is the smaller operand order.
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  QSeries truncated(int order) const;
  /// q -> q^k at the same truncation order.
  QSeries dilated(int k) const;
  /// Multiplication by q^j at the same truncation order.
  QSeries shifted(int j) const;
  /// q -> -q.
  QSeries sign_twisted() const;
  QSeries promoted(FieldLabel target) const;

  /// "1 - q - q^2 + q^5 + O(q^8)".
  std::string to_string() const;

 private:
  FieldLabel field_;
  std::vector<FieldElement> c_;
};

QSeries series_arith(const QSeries& x, const QSeries& y, char op);

/// First index <= order where the series differ, or nullopt. Refuses to compare
/// past either operand's truncation order (std::out_of_range).
std::optional<int> first_difference(const QSeries& a, const QSeries& b, int order);
std::optional<int> first_difference(const QSeries& a, const QSeries& b);

struct EtaFactor {
  int scale = 1;
  int power = 1;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// q^j * prod E(q^scale)^power.
struct EtaQuotientSpec {
  int j = 0;
  std::vector<EtaFactor> factors;

  /// Combines factors with equal scale and drops zero powers.
  static EtaQuotientSpec merged(int j, const std::vector<EtaFactor>& factors);

  /// Throws std::invalid_argument for non-positive scales, zero powers or repeated scales.
  void validate() const;
  Rational weight() const;
  i64 level() const;
  /// True when sum(power*scale) == 24*j, i.e. a genuine eta-quotient.
  bool proper() const;
  std::string to_string() const;
};

/// E(q^m) to order N from the pentagonal number theorem.
QSeries euler_E(int m, int order);
QSeries eta_quotient(const EtaQuotientSpec& spec, int order);
/// Integer coefficients of the eta-quotient, without wrapping in a QSeries.
std::vector<BigInt> eta_quotient_coefficients(const EtaQuotientSpec& spec, int order);

/// Ramanujan f(s_a q^u, s_b q^v) = sum_n s_a^{n(n+1)/2} s_b^{n(n-1)/2} q^{u n(n+1)/2 + v n(n-1)/2}.
/// Negative u or v is normalized by the shift identity first; throws std::domain_error
/// when the normalized series would need a negative power of q, std::invalid_argument if u+v <= 0.
QSeries theta_f(int u, int v, int order, int sign_a = 1, int sign_b = 1);
/// The shift n and prefactor exponent used to normalize f(q^u, q^v); both exponents
/// of the result f(q^{u'}, q^{v'}) are non-negative.
struct ThetaShift {
  int n;
  i64 prefactor;
  int u;
  int v;
};
ThetaShift theta_f_normalization(int u, int v);

QSeries phi_series(int order);  // f(q,q)
QSeries psi_series(int order);  // f(q,q^3)

/// prod_{k>=0} (1 - c q^{start + k*step}) with c = +-1 and start >= 1.
QSeries q_pochhammer(int c, int start, int step, int order);

/// Representation counts of F as a series: sum_n #{F(x,y)=n} q^n.
std::vector<i64> theta_form_counts(const Form& F, int order);
QSeries theta_form(const Form& F, int order);

struct IdentityPair {
  std::string name;
  QSeries lhs;
  QSeries rhs;
};

/// Both sides of the standard product/sum identities used throughout.
std::vector<IdentityPair> builder_identities_suite(int order = 400);

}  // namespace etaforms
