#include "etaforms/ntheory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace etaforms {

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mulmod(i64 a, i64 b, i64 m) {
  __int128 r = static_cast<__int128>(mod(a, m)) * mod(b, m) % m;
  return static_cast<i64>(r);
}

i64 powmod(i64 base, std::uint64_t exp, i64 m) {
  if (m == 1) return 0;
  i64 result = 1;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

i64 invmod(i64 a, i64 m) {
  i64 old_r = mod(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) throw std::domain_error("invmod: not invertible");
  return mod(old_s, m);
}

i64 isqrt(i64 n) {
  if (n < 0) throw std::domain_error("isqrt of negative number");
  auto r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  i64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = powmod(a, static_cast<std::uint64_t>(d), n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

i64 next_prime(i64 n) {
  i64 k = n < 2 ? 2 : n + 1;
  while (!is_prime(k)) ++k;
  return k;
}

std::vector<i64> primes_up_to(i64 bound) {
  std::vector<i64> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (i64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (i64 j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

namespace {

int legendre(i64 n, i64 p) {
  i64 r = mod(n, p);
  if (r == 0) return 0;
  return powmod(r, static_cast<std::uint64_t>((p - 1) / 2), p) == 1 ? 1 : -1;
}

int kronecker_prime(i64 n, i64 p) {
  if (p == 2) {
    if (n % 2 == 0) return 0;
    i64 r = mod(n, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  return legendre(n, p);
}

}  // namespace

int kronecker(i64 n, i64 m) {
  if (m < 1) throw std::invalid_argument("kronecker: m must be >= 1");
  int result = 1;
  for (const auto& [p, e] : factorize(m)) {
    int k = kronecker_prime(n, p);
    if (k == 0) return 0;
    if (k == -1 && (e % 2 == 1)) result = -result;
  }
  return result;
}

int ord_p(i64 n, i64 p) {
  if (n == 0) throw std::invalid_argument("ord_p: valuation of 0 is undefined");
  if (p < 2) throw std::invalid_argument("ord_p: p must be prime");
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

Factorization factorize(i64 n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  auto take = [&](i64 p) {
    if (n % p != 0) return;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  };
  take(2);
  take(3);
  for (i64 p = 5; p * p <= n; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

i64 expand(const Factorization& f) {
  i64 n = 1;
  for (const auto& [p, e] : f) {
    for (int i = 0; i < e; ++i) {
      if (__builtin_mul_overflow(n, p, &n)) throw std::overflow_error("expand: overflow");
    }
  }
  return n;
}

std::optional<i64> sqrt_mod(i64 a, i64 p) {
  a = mod(a, p);
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;

  i64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  i64 z = 2;
  while (legendre(z, p) != -1) ++z;

  i64 m = s;
  i64 c = powmod(z, static_cast<std::uint64_t>(q), p);
  i64 t = powmod(a, static_cast<std::uint64_t>(q), p);
  i64 r = powmod(a, static_cast<std::uint64_t>((q + 1) / 2), p);
  while (t != 1) {
    i64 i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    i64 b = c;
    for (i64 j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

// ---------------------------------------------------------------------------
// ModPoly

ModPoly::ModPoly(i64 modulus, std::vector<i64> ascending_coeffs)
    : p_(modulus), c_(std::move(ascending_coeffs)) {
  if (modulus < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
  for (auto& x : c_) x = mod(x, p_);
  trim();
}

ModPoly ModPoly::monomial(i64 modulus, int degree, i64 coeff) {
  std::vector<i64> c(static_cast<std::size_t>(degree) + 1, 0);
  c[degree] = coeff;
  return ModPoly(modulus, std::move(c));
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  std::vector<i64> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (coeff(int(i)) + o.coeff(int(i))) % p_;
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
  std::vector<i64> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) - o.coeff(int(i));
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
  if (is_zero() || o.is_zero()) return ModPoly(p_, {});
  std::vector<i64> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
    }
  }
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::scaled(i64 k) const {
  std::vector<i64> r(c_);
  for (auto& x : r) x = mulmod(x, k, p_);
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(invmod(c_.back(), p_));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(p_, {});
  std::vector<i64> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod(c_[i], static_cast<i64>(i), p_);
  return ModPoly(p_, std::move(r));
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& divisor) const {
  if (divisor.p_ != p_) throw std::invalid_argument("ModPoly: modulus mismatch");
  if (divisor.is_zero()) throw std::domain_error("ModPoly: division by zero polynomial");
  std::vector<i64> rem(c_);
  int dd = divisor.degree();
  if (degree() < dd) return {ModPoly(p_, {}), *this};
  std::vector<i64> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
  i64 lead_inv = invmod(divisor.c_.back(), p_);
  for (int k = degree(); k >= dd; --k) {
    i64 coef = mulmod(rem[k], lead_inv, p_);
    if (coef == 0) continue;
    quot[k - dd] = coef;
    for (int j = 0; j <= dd; ++j) {
      rem[k - dd + j] = mod(rem[k - dd + j] - mulmod(coef, divisor.c_[j], p_), p_);
    }
  }
  return {ModPoly(p_, std::move(quot)), ModPoly(p_, std::move(rem))};
}

std::string ModPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c_[k] != 1) os << c_[k];
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

ModPoly poly_gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPoly poly_powmod(const ModPoly& base, std::uint64_t exp, const ModPoly& modulus) {
  ModPoly result(modulus.modulus(), {1});
  result = result % modulus;
  ModPoly b = base % modulus;
  while (exp > 0) {
    if (exp & 1U) result = (result * b) % modulus;
    b = (b * b) % modulus;
    exp >>= 1U;
  }
  return result;
}

ModPoly poly_rem_frobenius(const ModPoly& W) {
  if (W.degree() < 1) throw std::invalid_argument("poly_rem_frobenius: degree must be >= 1");
  if (!W.is_monic()) throw std::invalid_argument("poly_rem_frobenius: W must be monic");
  ModPoly z = ModPoly::monomial(W.modulus(), 1);
  return poly_powmod(z, static_cast<std::uint64_t>(W.modulus()), W);
}

std::vector<int> factor_degree_pattern(const ModPoly& W) {
  if (W.degree() < 1) throw std::invalid_argument("factor_degree_pattern: degree must be >= 1");
  ModPoly f = W.monic();
  if (poly_gcd(f, f.derivative()).degree() != 0) {
    throw std::domain_error("factor_degree_pattern: polynomial is not squarefree mod p");
  }
  const i64 p = f.modulus();
  const ModPoly z = ModPoly::monomial(p, 1);
  std::vector<int> pattern;
  ModPoly h = z;  // z^(p^k) mod f
  for (int k = 1; f.degree() >= 2 * k; ++k) {
    h = poly_powmod(h, static_cast<std::uint64_t>(p), f);
    ModPoly g = poly_gcd(f, h - z);
    if (g.degree() > 0) {
      for (int i = 0; i < g.degree() / k; ++i) pattern.push_back(k);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) pattern.push_back(f.degree());
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

}  // namespace etaforms
