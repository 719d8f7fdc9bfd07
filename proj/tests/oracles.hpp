#pragma once
// Deliberately naive reference implementations. Nothing here calls the library's
// series or counting code, so agreement is an independent check.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "etaforms/algnum.hpp"
#include "etaforms/form.hpp"

namespace oracle {

using etaforms::BigInt;
using etaforms::i64;

using Poly = std::vector<BigInt>;

inline Poly mul(const Poly& a, const Poly& b, int order) {
  Poly r(order + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// prod_{n>=1} (1 - q^{s n})^r by repeated multiplication with binomials and geometric series.
inline Poly euler_power(int s, int r, int order) {
  Poly acc(order + 1);
  acc[0] = 1;
  for (int n = 1; s * n <= order; ++n) {
    const int e = s * n;
    for (int k = 0; k < std::abs(r); ++k) {
      if (r > 0) {
        for (int i = order; i >= e; --i) acc[i] -= acc[i - e];
      } else {
        for (int i = e; i <= order; ++i) acc[i] += acc[i - e];
      }
    }
  }
  return acc;
}

struct Factor {
  int scale, power;
};

inline Poly eta(int j, const std::vector<Factor>& fs, int order) {
  Poly acc(order + 1);
  acc[0] = 1;
  for (const auto& f : fs) acc = mul(acc, euler_power(f.scale, f.power, order), order);
  Poly out(order + 1);
  for (int i = 0; i + j <= order; ++i) out[i + j] = acc[i];
  return out;
}

// Box enumeration: |x|, |y| <= bound is enough because a x^2 + bxy + c y^2 >= (|d|/4c) x^2.
inline std::vector<i64> theta(const etaforms::Form& F, int order) {
  std::vector<i64> c(order + 1, 0);
  const i64 d = -F.discriminant();
  i64 bx = 0, by = 0;
  while (d * bx * bx <= 4 * F.c * order) ++bx;
  while (d * by * by <= 4 * F.a * order) ++by;
  for (i64 x = -bx; x <= bx; ++x)
    for (i64 y = -by; y <= by; ++y) {
      const i64 v = F.a * x * x + F.b * x * y + F.c * y * y;
      if (v <= order) ++c[v];
    }
  return c;
}

inline i64 rep(const etaforms::Form& F, i64 n) {
  const i64 d = -F.discriminant();
  i64 count = 0;
  for (i64 x = 0; d * x * x <= 4 * F.c * n; ++x) {
    for (i64 sx : {x, -x}) {
      for (i64 y = 0; d * y * y <= 4 * F.a * n; ++y) {
        for (i64 sy : {y, -y}) {
          if (F.a * sx * sx + F.b * sx * sy + F.c * sy * sy == n) ++count;
          if (y == 0) break;
        }
      }
      if (x == 0) break;
    }
  }
  return count;
}

inline i64 powmod(i64 b, i64 e, i64 m) {
  i64 r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = static_cast<i64>(static_cast<__int128>(r) * b % m);
    b = static_cast<i64>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre(i64 a, i64 p) {
  const i64 r = powmod(((a % p) + p) % p, (p - 1) / 2, p);
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

inline std::vector<i64> primes(i64 bound) {
  std::vector<i64> out;
  for (i64 p = 2; p <= bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace oracle
