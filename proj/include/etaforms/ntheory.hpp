#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace etaforms {

using i64 = std::int64_t;

/// A prime power p^e appearing in a factorization.
struct PrimePower {
  i64 prime = 2;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

i64 gcd(i64 a, i64 b);
i64 mod(i64 a, i64 m);  // result in [0, m)
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 base, std::uint64_t exp, i64 m);
i64 invmod(i64 a, i64 m);  // throws std::domain_error if not invertible
i64 isqrt(i64 n);
bool is_square(i64 n);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(i64 n);
i64 next_prime(i64 n);  // smallest prime > n
std::vector<i64> primes_up_to(i64 bound);

/// Kronecker symbol (n/m) for m >= 1, multiplicative over the factorization of m.
int kronecker(i64 n, i64 m);

/// Exponent of p in n. Rejects n == 0.
int ord_p(i64 n, i64 p);

/// Prime factorization by trial division; primes strictly increasing, n == 1 gives {}.
Factorization factorize(i64 n);
i64 expand(const Factorization& f);

/// Tonelli-Shanks. Returns min(r, p - r) with r^2 = a (mod p), or nullopt for a non-residue.
std::optional<i64> sqrt_mod(i64 a, i64 p);

/// Dense polynomial over F_p, coefficients ascending by degree and trimmed.
class ModPoly {
 public:
  ModPoly(i64 modulus, std::vector<i64> ascending_coeffs);
  static ModPoly monomial(i64 modulus, int degree, i64 coeff = 1);

  i64 modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  i64 coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0; }
  const std::vector<i64>& coeffs() const { return c_; }

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly scaled(i64 k) const;
  ModPoly monic() const;
  ModPoly derivative() const;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& divisor) const;
  ModPoly operator%(const ModPoly& o) const { return divmod(o).second; }
  ModPoly operator/(const ModPoly& o) const { return divmod(o).first; }

  friend bool operator==(const ModPoly&, const ModPoly&) = default;

  std::string to_string(char var = 'z') const;

 private:
  void trim();
  i64 p_;
  std::vector<i64> c_;
};

ModPoly poly_gcd(ModPoly a, ModPoly b);  // monic gcd
ModPoly poly_powmod(const ModPoly& base, std::uint64_t exp, const ModPoly& modulus);

/// rem(z^p, W) over F_p by square-and-multiply. W must be monic of degree >= 1.
ModPoly poly_rem_frobenius(const ModPoly& W);

/// Degrees of the irreducible factors of a squarefree W (sorted ascending).
/// Throws std::domain_error when gcd(W, W') != 1.
std::vector<int> factor_degree_pattern(const ModPoly& W);

}  // namespace etaforms
