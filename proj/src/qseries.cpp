#include "etaforms/qseries.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace etaforms {

QSeries::QSeries(FieldLabel field, int order) : field_(field) {
  if (order < 0) throw std::invalid_argument("QSeries: negative order");
  c_.assign(order + 1, FieldElement(field));
}

QSeries QSeries::from_integers(const std::vector<i64>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("QSeries: empty coefficient list");
  QSeries s(FieldLabel::Rational, static_cast<int>(coeffs.size()) - 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) s.c_[i] = FieldElement(FieldLabel::Rational, Rational(coeffs[i]));
  }
  return s;
}

QSeries QSeries::from_integers(const std::vector<BigInt>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("QSeries: empty coefficient list");
  QSeries s(FieldLabel::Rational, static_cast<int>(coeffs.size()) - 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) s.c_[i] = FieldElement(FieldLabel::Rational, Rational(coeffs[i]));
  }
  return s;
}

QSeries QSeries::one(FieldLabel field, int order) {
  QSeries s(field, order);
  s.c_[0] = FieldElement::integer(field, 1);
  return s;
}

QSeries QSeries::monomial(const FieldElement& coeff, int exponent, int order) {
  QSeries s(coeff.field(), order);
  if (exponent < 0) throw std::invalid_argument("QSeries: negative exponent");
  if (exponent <= order) s.c_[exponent] = coeff;
  return s;
}

const FieldElement& QSeries::operator[](int n) const {
  if (n < 0 || n > order()) {
    throw std::out_of_range("QSeries: index " + std::to_string(n) + " beyond truncation order " +
                            std::to_string(order()));
  }
  return c_[n];
}

void QSeries::set(int n, const FieldElement& value) {
  (void)(*this)[n];
  field_ = common_field(field_, value.field());
  c_[n] = value.promoted(field_);
  if (field_ != FieldLabel::Rational) {
    for (auto& x : c_) x = x.promoted(field_);
  }
}

void QSeries::add_to(int n, const FieldElement& value) {
  (void)(*this)[n];
  if (value.field() != field_ && field_ == FieldLabel::Rational) *this = promoted(value.field());
  c_[n] += value;
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

std::optional<int> QSeries::first_nonzero() const {
  for (int i = 0; i <= order(); ++i) {
    if (!c_[i].is_zero()) return i;
  }
  return std::nullopt;
}

QSeries QSeries::operator-() const {
  QSeries r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

QSeries QSeries::promoted(FieldLabel target) const {
  if (target == field_) return *this;
  QSeries r(target, order());
  for (int i = 0; i <= order(); ++i) r.c_[i] = c_[i].promoted(target);
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  FieldLabel f = common_field(field_, o.field_);
  if (f != field_) *this = promoted(f);
  if (o.order() < order()) c_.resize(o.order() + 1);
  for (int i = 0; i <= order(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  }
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  FieldLabel f = common_field(field_, o.field_);
  if (f != field_) *this = promoted(f);
  if (o.order() < order()) c_.resize(o.order() + 1);
  for (int i = 0; i <= order(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  }
  return *this;
}

QSeries& QSeries::operator*=(const FieldElement& s) {
  FieldLabel f = common_field(field_, s.field());
  if (f != field_) *this = promoted(f);
  for (auto& x : c_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& x : c_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const FieldLabel f = common_field(a.field_, b.field_);
  const int n = std::min(a.order(), b.order());
  std::vector<int> nzb;
  for (int j = 0; j <= n; ++j) {
    if (!b.c_[j].is_zero()) nzb.push_back(j);
  }
  QSeries r(f, n);
  const bool rational = a.field_ == FieldLabel::Rational && b.field_ == FieldLabel::Rational;
  if (rational) {
    std::vector<Rational> acc(n + 1);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[i].is_zero()) continue;
      const Rational& ai = a.c_[i].coordinate(0);
      for (int j : nzb) {
        if (i + j > n) break;
        acc[i + j] += ai * b.c_[j].coordinate(0);
      }
    }
    for (int i = 0; i <= n; ++i) r.c_[i] = FieldElement(f, acc[i]);
    return r;
  }
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j : nzb) {
      if (i + j > n) break;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

QSeries QSeries::truncated(int new_order) const {
  if (new_order > order()) {
    throw std::out_of_range("QSeries: cannot extend truncation order " + std::to_string(order()) +
                            " to " + std::to_string(new_order));
  }
  QSeries r(*this);
  r.c_.resize(new_order + 1);
  return r;
}

QSeries QSeries::dilated(int k) const {
  if (k < 1) throw std::invalid_argument("QSeries: dilation factor must be positive");
  QSeries r(field_, order());
  for (int i = 0; i * k <= order(); ++i) r.c_[i * k] = c_[i];
  return r;
}

QSeries QSeries::shifted(int j) const {
  if (j < 0) throw std::invalid_argument("QSeries: negative shift");
  QSeries r(field_, order());
  for (int i = 0; i + j <= order(); ++i) r.c_[i + j] = c_[i];
  return r;
}

QSeries QSeries::sign_twisted() const {
  QSeries r(*this);
  for (int i = 1; i <= order(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= order(); ++n) {
    const FieldElement& x = c_[n];
    if (x.is_zero()) continue;
    std::string coeff;
    bool negative = false;
    if (x.is_rational()) {
      Rational r = x.as_rational();
      negative = r < 0;
      if (negative) r = -r;
      coeff = (r == 1 && n > 0) ? "" : etaforms::to_string(r);
    } else {
      coeff = "(" + x.to_string() + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << coeff;
    if (n > 0) {
      if (!coeff.empty()) os << '*';
      os << 'q';
      if (n > 1) os << '^' << n;
    }
  }
  if (first) os << '0';
  os << " + O(q^" << order() + 1 << ')';
  return os.str();
}

QSeries series_arith(const QSeries& x, const QSeries& y, char op) {
  switch (op) {
    case '+': return x + y;
    case '-': return x - y;
    case '*': return x * y;
    default: throw std::invalid_argument("series_arith: op must be one of + - *");
  }
}

std::optional<int> first_difference(const QSeries& a, const QSeries& b, int order) {
  if (order > a.order() || order > b.order()) {
    throw std::out_of_range("first_difference: comparison order " + std::to_string(order) +
                            " exceeds a truncation order (" + std::to_string(a.order()) + ", " +
                            std::to_string(b.order()) + ")");
  }
  for (int i = 0; i <= order; ++i) {
    if (!(a[i] == b[i])) return i;
  }
  return std::nullopt;
}

std::optional<int> first_difference(const QSeries& a, const QSeries& b) {
  return first_difference(a, b, std::min(a.order(), b.order()));
}

// ---------------------------------------------------------------------------

EtaQuotientSpec EtaQuotientSpec::merged(int j, const std::vector<EtaFactor>& factors) {
  std::map<int, int> by_scale;
  for (const auto& f : factors) {
    if (f.scale < 1) throw std::invalid_argument("eta quotient: scale must be positive");
    by_scale[f.scale] += f.power;
  }
  EtaQuotientSpec spec;
  spec.j = j;
  for (auto [s, r] : by_scale) {
    if (r != 0) spec.factors.push_back({s, r});
  }
  return spec;
}

void EtaQuotientSpec::validate() const {
  if (j < 0) throw std::invalid_argument("eta quotient: negative prefactor exponent");
  std::vector<int> seen;
  for (const auto& f : factors) {
    if (f.scale < 1) throw std::invalid_argument("eta quotient: scale must be positive");
    if (f.power == 0) throw std::invalid_argument("eta quotient: zero power");
    if (std::find(seen.begin(), seen.end(), f.scale) != seen.end()) {
      throw std::invalid_argument("eta quotient: repeated scale " + std::to_string(f.scale));
    }
    seen.push_back(f.scale);
  }
}

Rational EtaQuotientSpec::weight() const {
  i64 total = 0;
  for (const auto& f : factors) total += f.power;
  return Rational(total, 2);
}

i64 EtaQuotientSpec::level() const {
  // Smallest N with every scale dividing N and 24 | N*sum(r_i/s_i).
  i64 lcm_scales = 1;
  for (const auto& f : factors) lcm_scales = lcm_scales / gcd(lcm_scales, f.scale) * f.scale;
  for (i64 k = 1; k <= 24; ++k) {
    const i64 n = lcm_scales * k;
    i64 sum = 0;
    for (const auto& f : factors) sum += f.power * (n / f.scale);
    if (sum % 24 == 0) return n;
  }
  return lcm_scales * 24;
}

bool EtaQuotientSpec::proper() const {
  i64 sum = 0;
  for (const auto& f : factors) sum += static_cast<i64>(f.power) * f.scale;
  return sum == 24 * static_cast<i64>(j);
}

std::string EtaQuotientSpec::to_string() const {
  std::ostringstream os;
  if (j != 0) os << (j == 1 ? "q" : "q^" + std::to_string(j));
  for (const auto& f : factors) {
    if (os.tellp() > 0) os << ' ';
    os << "E(q" << (f.scale == 1 ? "" : "^" + std::to_string(f.scale)) << ')';
    if (f.power != 1) os << '^' << f.power;
  }
  if (os.tellp() == 0) os << '1';
  return os.str();
}

namespace {

// Exponents and signs of E(q^m) up to N, excluding the constant term.
std::vector<std::pair<int, int>> pentagonal_terms(int m, int order) {
  std::vector<std::pair<int, int>> out;
  for (i64 k = 1;; ++k) {
    const i64 e1 = m * (k * (3 * k - 1) / 2);
    const i64 e2 = m * (k * (3 * k + 1) / 2);
    const int sign = (k % 2 == 0) ? 1 : -1;
    if (e1 > order) break;
    out.push_back({static_cast<int>(e1), sign});
    if (e2 <= order) out.push_back({static_cast<int>(e2), sign});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

QSeries euler_E(int m, int order) {
  if (m < 1) throw std::invalid_argument("euler_E: scale must be positive");
  QSeries s = QSeries::one(FieldLabel::Rational, order);
  for (auto [e, sign] : pentagonal_terms(m, order)) {
    s.set(e, FieldElement::integer(FieldLabel::Rational, sign));
  }
  return s;
}

std::vector<BigInt> eta_quotient_coefficients(const EtaQuotientSpec& spec, int order) {
  spec.validate();
  if (order < 0) throw std::invalid_argument("eta quotient: negative order");
  std::vector<BigInt> out(order + 1);
  if (spec.j > order) return out;
  const int m = order - spec.j;
  std::vector<BigInt> r(m + 1);
  r[0] = 1;
  // Numerators first keeps intermediate values small.
  std::vector<EtaFactor> sorted = spec.factors;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const EtaFactor& a, const EtaFactor& b) { return a.power > b.power; });
  for (const auto& f : sorted) {
    const auto terms = pentagonal_terms(f.scale, m);
    if (f.power > 0) {
      for (int rep = 0; rep < f.power; ++rep) {
        for (int n = m; n >= 0; --n) {
          BigInt acc = 0;
          for (auto [e, sign] : terms) {
            if (e > n) break;
            if (sign > 0) acc += r[n - e]; else acc -= r[n - e];
          }
          r[n] += acc;
        }
      }
    } else {
      for (int rep = 0; rep < -f.power; ++rep) {
        for (int n = 0; n <= m; ++n) {
          BigInt acc = 0;
          for (auto [e, sign] : terms) {
            if (e > n) break;
            if (sign > 0) acc += r[n - e]; else acc -= r[n - e];
          }
          r[n] -= acc;
        }
      }
    }
  }
  for (int n = 0; n <= m; ++n) out[n + spec.j] = std::move(r[n]);
  return out;
}

QSeries eta_quotient(const EtaQuotientSpec& spec, int order) {
  return QSeries::from_integers(eta_quotient_coefficients(spec, order));
}

ThetaShift theta_f_normalization(int u, int v) {
  const i64 s = static_cast<i64>(u) + v;
  if (s <= 0) throw std::invalid_argument("theta_f: requires u+v > 0");
  if (u >= 0 && v >= 0) return {0, 0, u, v};
  // u + s k >= 0 and v - s k >= 0 always has a solution since the window has length 1.
  i64 k = u < 0 ? (-static_cast<i64>(u) + s - 1) / s : -((-static_cast<i64>(v) + s - 1) / s);
  const i64 pre = u * (k * (k + 1) / 2) + static_cast<i64>(v) * (k * (k - 1) / 2);
  return {static_cast<int>(k), pre, static_cast<int>(u + s * k), static_cast<int>(v - s * k)};
}

QSeries theta_f(int u, int v, int order, int sign_a, int sign_b) {
  if (std::abs(sign_a) != 1 || std::abs(sign_b) != 1) {
    throw std::invalid_argument("theta_f: signs must be +1 or -1");
  }
  const ThetaShift sh = theta_f_normalization(u, v);
  if (sh.prefactor < 0) {
    throw std::domain_error("theta_f: normalized series needs q^" + std::to_string(sh.prefactor));
  }
  auto tri_sign = [](int sign, i64 t) { return (sign < 0 && (t & 1)) ? -1 : 1; };
  const i64 k = sh.n;
  int prefactor_sign = tri_sign(sign_a, k * (k + 1) / 2) * tri_sign(sign_b, k * (k - 1) / 2);
  const int ab = sign_a * sign_b;
  const int sa = (ab < 0 && (k & 1)) ? -sign_a : sign_a;
  const int sb = (ab < 0 && (k & 1)) ? -sign_b : sign_b;

  std::vector<i64> c(order + 1, 0);
  auto add = [&](i64 n) {
    const i64 e = sh.prefactor + sh.u * (n * (n + 1) / 2) + static_cast<i64>(sh.v) * (n * (n - 1) / 2);
    if (e > order) return false;
    c[e] += prefactor_sign * tri_sign(sa, n * (n + 1) / 2) * tri_sign(sb, n * (n - 1) / 2);
    return true;
  };
  // Exponents are monotone on n >= 0 and on n <= -1 once both exponents are non-negative.
  for (i64 n = 0; add(n); ++n) {}
  for (i64 n = -1; add(n); --n) {}
  return QSeries::from_integers(c);
}

QSeries phi_series(int order) { return theta_f(1, 1, order); }
QSeries psi_series(int order) { return theta_f(1, 3, order); }

QSeries q_pochhammer(int c, int start, int step, int order) {
  if (std::abs(c) != 1 || start < 1 || step < 1) {
    throw std::invalid_argument("q_pochhammer: need c = +-1, start >= 1, step >= 1");
  }
  std::vector<BigInt> r(order + 1);
  r[0] = 1;
  for (i64 e = start; e <= order; e += step) {
    for (i64 n = order; n >= e; --n) {
      if (c > 0) r[n] -= r[n - e]; else r[n] += r[n - e];
    }
  }
  return QSeries::from_integers(r);
}

std::vector<i64> theta_form_counts(const Form& F, int order) {
  if (!F.positive_definite()) {
    throw std::invalid_argument("theta_form: form " + F.to_string() + " is not positive definite");
  }
  std::vector<i64> c(order + 1, 0);
  const i64 a = F.a, b = F.b, cc = F.c;
  const i64 absd = -F.discriminant();
  const i64 N = order;
  // 4a F(x,y) = (2ax + by)^2 + |d| y^2.
  const i64 ymax = isqrt((4 * a * N) / absd);
  for (i64 y = -ymax; y <= ymax; ++y) {
    const i64 disc = 4 * a * N - absd * y * y;
    if (disc < 0) continue;
    const i64 r = isqrt(disc);
    // 2ax + by in [-r, r]
    const i64 lo = (-r - b * y) / (2 * a) - 1;
    const i64 hi = (r - b * y) / (2 * a) + 1;
    for (i64 x = lo; x <= hi; ++x) {
      const i64 v = a * x * x + b * x * y + cc * y * y;
      if (v <= N) ++c[v];
    }
  }
  return c;
}

QSeries theta_form(const Form& F, int order) { return QSeries::from_integers(theta_form_counts(F, order)); }

namespace {

QSeries eq(int j, std::vector<EtaFactor> f, int order) {
  return eta_quotient(EtaQuotientSpec::merged(j, f), order);
}

// f(q^u, q^v) via the triple product (-q^u; q^s)(-q^v; q^s)(q^s; q^s), s = u+v.
QSeries jtp_product(int u, int v, int order) {
  const int s = u + v;
  return q_pochhammer(-1, u, s, order) * q_pochhammer(-1, v, s, order) * euler_E(s, order);
}

}  // namespace

std::vector<IdentityPair> builder_identities_suite(int order) {
  const int N = order;
  std::vector<IdentityPair> out;
  for (auto [u, v] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {5, 7}, {3, 15}}) {
    out.push_back({"jtp(" + std::to_string(u) + "," + std::to_string(v) + ")", theta_f(u, v, N),
                   jtp_product(u, v, N)});
  }
  out.push_back({"pent", euler_E(1, N), theta_f(1, 2, N, -1, -1)});
  out.push_back({"phi", phi_series(N), eq(0, {{2, 5}, {4, -2}, {1, -2}}, N)});
  out.push_back({"psi", psi_series(N), eq(0, {{2, 2}, {1, -1}}, N)});
  out.push_back({"f12", theta_f(1, 2, N), eq(0, {{3, 2}, {2, 1}, {6, -1}, {1, -1}}, N)});
  out.push_back({"f15", theta_f(1, 5, N), eq(0, {{12, 1}, {2, 2}, {3, 1}, {6, -1}, {4, -1}, {1, -1}}, N)});
  out.push_back({"pentcor", euler_E(1, N), theta_f(5, 7, N) - theta_f(1, 11, N).shifted(1)});
  out.push_back({"mod31", phi_series(N), phi_series(N).dilated(9) + theta_f(3, 15, N).shifted(1) * Rational(2)});
  out.push_back({"phieven", phi_series(N), phi_series(N).dilated(4) + psi_series(N).dilated(8).shifted(1) * Rational(2)});
  out.push_back({"psipsiaux", psi_series(N).sign_twisted(), theta_f(6, 10, N) - theta_f(2, 14, N).shifted(1)});
  out.push_back({"mod32", psi_series(N), theta_f(3, 6, N) + psi_series(N).dilated(9).shifted(1)});
  out.push_back({"E(-q)", euler_E(1, N).sign_twisted(), eq(0, {{2, 3}, {4, -1}, {1, -1}}, N)});
  out.push_back({"phi(-q)", phi_series(N).sign_twisted(), eq(0, {{1, 2}, {2, -1}}, N)});
  out.push_back({"psi(-q)", psi_series(N).sign_twisted(), eq(0, {{1, 1}, {4, 1}, {2, -1}}, N)});
  return out;
}

}  // namespace etaforms
