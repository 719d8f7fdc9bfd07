#include "etaforms/algnum.hpp"

#include <sstream>
#include <stdexcept>

namespace etaforms {

namespace {

// x^2 - x - 1 for lambda, x^2 - 2, x^3 + x^2 - 2x - 1.
const NumberField kFields[] = {
    {FieldLabel::Rational, 1, {0, 1, 0, 0}, "Q", ""},
    {FieldLabel::Sqrt5, 2, {-1, -1, 1, 0}, "Q(sqrt5)", "lambda"},
    {FieldLabel::Sqrt2, 2, {-2, 0, 1, 0}, "Q(sqrt2)", "sqrt2"},
    {FieldLabel::Cos7, 3, {-1, -2, 1, 1}, "Q(alpha)", "alpha"},
};

// sigma(theta) in power-basis coordinates.
FieldElement sigma_of_generator(FieldLabel f) {
  switch (f) {
    case FieldLabel::Rational: return FieldElement(f, Rational(0));
    case FieldLabel::Sqrt5: return FieldElement(f, {1, -1});      // mu = 1 - lambda
    case FieldLabel::Sqrt2: return FieldElement(f, {0, -1});      // -sqrt2
    case FieldLabel::Cos7: return FieldElement(f, {-2, 0, 1});    // beta = alpha^2 - 2
  }
  throw std::logic_error("unknown field");
}

}  // namespace

const NumberField& number_field(FieldLabel label) {
  return kFields[static_cast<int>(label)];
}

std::string field_name(FieldLabel label) { return number_field(label).name; }

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

FieldElement::FieldElement(FieldLabel field, std::initializer_list<Rational> coords)
    : field_(field) {
  if (static_cast<int>(coords.size()) > number_field(field).degree) {
    throw std::invalid_argument("FieldElement: too many coordinates for field");
  }
  int i = 0;
  for (const auto& r : coords) c_[i++] = r;
}

FieldElement FieldElement::generator(FieldLabel field) {
  if (field == FieldLabel::Rational) throw std::invalid_argument("Q has no generator");
  FieldElement g(field);
  g.c_[1] = 1;
  return g;
}

const Rational& FieldElement::coordinate(int i) const {
  if (i < 0 || i >= degree()) throw std::out_of_range("FieldElement: coordinate index out of range");
  return c_[i];
}

bool FieldElement::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

bool FieldElement::is_rational() const { return c_[1] == 0 && c_[2] == 0; }

const Rational& FieldElement::as_rational() const {
  if (!is_rational()) throw std::domain_error("FieldElement is not rational: " + to_string());
  return c_[0];
}

BigInt FieldElement::as_integer() const {
  const Rational& r = as_rational();
  if (denominator(r) != 1) throw std::domain_error("FieldElement is not an integer: " + to_string());
  return numerator(r);
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

FieldLabel common_field(FieldLabel a, FieldLabel b) {
  if (a == b) return a;
  if (a == FieldLabel::Rational) return b;
  if (b == FieldLabel::Rational) return a;
  throw std::invalid_argument("field mismatch: " + field_name(a) + " vs " + field_name(b));
}

FieldElement FieldElement::promoted(FieldLabel target) const {
  if (field_ == target) return *this;
  if (field_ != FieldLabel::Rational) {
    throw std::invalid_argument("cannot move element of " + field_name(field_) + " to " + field_name(target));
  }
  FieldElement r(target);
  r.c_[0] = c_[0];
  return r;
}

FieldElement promote_common(const FieldElement& x, FieldLabel target) { return x.promoted(target); }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  FieldLabel f = common_field(field_, o.field_);
  field_ = f;
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  FieldLabel f = common_field(field_, o.field_);
  field_ = f;
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  FieldLabel f = common_field(field_, o.field_);
  if (o.is_rational()) {
    field_ = f;
    return *this *= o.c_[0];
  }
  if (is_rational()) {
    Rational s = c_[0];
    *this = o;
    return *this *= s;
  }
  const NumberField& nf = number_field(f);
  const int n = nf.degree;
  std::array<Rational, 5> prod{};
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  // theta^n = -sum_{i<n} m_i theta^i
  for (int k = 2 * n - 2; k >= n; --k) {
    if (prod[k] == 0) continue;
    Rational top = prod[k];
    prod[k] = 0;
    for (int i = 0; i < n; ++i) prod[k - n + i] -= top * nf.min_poly[i];
  }
  field_ = f;
  for (int i = 0; i < 3; ++i) c_[i] = i < n ? prod[i] : Rational(0);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_ && !(a.is_rational() && b.is_rational())) {
    // Elements of different fields only compare equal when both are rational.
    return false;
  }
  return a.c_ == b.c_;
}

FieldElement FieldElement::sigma() const {
  if (field_ == FieldLabel::Rational || is_rational()) return *this;
  const FieldElement s = sigma_of_generator(field_);
  FieldElement r(field_, c_[0]);
  FieldElement power = s;
  for (int i = 1; i < degree(); ++i) {
    r += power * c_[i];
    power *= s;
  }
  return r;
}

FieldElement FieldElement::norm() const {
  FieldElement r = *this;
  FieldElement conj = *this;
  for (int i = 1; i < degree(); ++i) {
    conj = conj.sigma();
    r *= conj;
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: division by zero");
  if (is_rational()) return FieldElement(field_, Rational(1) / c_[0]);
  FieldElement others(field_, Rational(1));
  FieldElement conj = *this;
  for (int i = 1; i < degree(); ++i) {
    conj = conj.sigma();
    others *= conj;
  }
  Rational n = (*this * others).as_rational();
  return others * (Rational(1) / n);
}

FieldElement FieldElement::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElement result(field_, Rational(1));
  FieldElement base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::string FieldElement::to_string() const {
  if (is_zero()) return "0";
  const NumberField& nf = number_field(field_);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nf.degree; ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << nf.generator;
    if (i == 2) os << "^2";
  }
  return os.str();
}

std::vector<FieldElement> fe_conjugates(const FieldElement& x) {
  std::vector<FieldElement> out{x};
  for (int i = 1; i < x.degree(); ++i) out.push_back(out.back().sigma());
  return out;
}

FieldElement fe_arith(const FieldElement& x, const FieldElement& y, char op) {
  if (x.field() != y.field()) {
    throw std::invalid_argument("fe_arith: field mismatch");
  }
  switch (op) {
    case '+': return x + y;
    case '-': return x - y;
    case '*': return x * y;
    default: throw std::invalid_argument("fe_arith: op must be one of + - *");
  }
}

Rational fe_coordinate(const FieldElement& x, int i) { return x.coordinate(i); }

namespace constants {
FieldElement lambda() { return FieldElement::generator(FieldLabel::Sqrt5); }
FieldElement mu() { return FieldElement(FieldLabel::Sqrt5, {1, -1}); }
FieldElement sqrt5() { return FieldElement(FieldLabel::Sqrt5, {-1, 2}); }
FieldElement sqrt2() { return FieldElement::generator(FieldLabel::Sqrt2); }
FieldElement alpha() { return FieldElement::generator(FieldLabel::Cos7); }
FieldElement beta() { return FieldElement(FieldLabel::Cos7, {-2, 0, 1}); }
FieldElement gamma() { return FieldElement(FieldLabel::Cos7, {1, -1, -1}); }
}  // namespace constants

}  // namespace etaforms
