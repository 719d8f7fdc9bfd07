#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etaforms/bqf.hpp"
#include "etaforms/qseries.hpp"

namespace etaforms {

/// The six levels with closed coefficient formulas, and their discriminants.
const std::vector<int>& formula_levels();
i64 level_discriminant(int level);
/// Throws std::invalid_argument for anything outside formula_levels().
void require_level(int level);

struct WeberPolynomial {
  i64 discriminant;
  std::vector<i64> coeffs;  // ascending, monic

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  ModPoly mod(i64 p) const;
  std::string to_string() const;
};
const WeberPolynomial& weber_polynomial(i64 d);

enum class Verdict { Ramified, Conductor, Inert, Split };
std::string to_string(Verdict v);

struct PrimeClassification {
  i64 discriminant = 0;
  i64 prime = 0;
  Verdict verdict = Verdict::Inert;
  /// Representative of the class pair representing p (b >= 0); unset for Inert/Conductor.
  std::optional<Form> form;
  /// Name of the prime set this prime belongs to for the level's formula ("S2", "ramified", ...).
  std::string set_label;
  /// "kronecker", "remainder", "pattern", "genus+oracle" or "oracle".
  std::string method;
  std::optional<std::pair<i64, i64>> witness;

  std::string to_string() const;
};

/// Prime classification using the Weber-polynomial criteria where available. Cached and
/// safe to call concurrently. Throws std::invalid_argument for unknown d or non-prime p.
PrimeClassification classify_prime(i64 d, i64 p);
/// The same verdict computed only from representation counts.
PrimeClassification classify_by_oracle(i64 d, i64 p);
/// Class-pair representatives for d, in the order the criteria list them.
const std::vector<Form>& class_pair_representatives(i64 d);

/// Candidate remainders 94*rem(z^p, W) (resp. 142*) for each class pair and root sign;
/// exposed for testing the criteria.
std::vector<std::pair<Form, ModPoly>> remainder_criteria(i64 d, i64 p, i64 r);

/// Periodic eigenvalue functions, stored as exact table values.
/// which is 'U', 'V' or 'W'; throws std::invalid_argument for an unknown combination.
FieldElement periodic_value(int level, char which, i64 n);
int periodic_period(int level);

BigInt fib_b(int L);
BigInt trinomial_T(int L, int M, int a);
BigInt trinomial_G(int L, int M);

/// Counts of prime factors by set, for the closed forms.
struct LevelFactorData {
  int level = 0;
  /// Per prime dividing n: classification and exponent.
  std::vector<std::pair<PrimeClassification, int>> primes;
};
LevelFactorData factor_data(int level, const Factorization& f);

// Level 47: coefficient of q^n in q^2 E(q) E(q^47).
BigInt a47(i64 n);                          // piecewise b(L) form
BigInt a47_fib(const Factorization& f);
BigInt a47_powers(const Factorization& f);  // Delta * (lambda^e - mu^e)/sqrt5
BigInt a47_eigen(const Factorization& f);   // sqrt5-coordinate of the A1 product

// Level 71: coefficient of q^n in q^3 E(q) E(q^71).
BigInt a71(i64 n);
BigInt a71(const Factorization& f);          // Delta/7 * sum of conjugate Delta_i
BigInt a71_exponents(const Factorization& f);  // Delta_1 from the closed exponent form
/// Only for n whose primes all lie in S2; throws std::invalid_argument otherwise.
BigInt a71_g(const Factorization& f);
FieldElement delta71(const Factorization& f, int which);  // Delta_1, Delta_2, Delta_3

// Levels 135, 648, 1872: the completion coefficient [q^n]A.
BigInt a135(i64 n);
BigInt a648(i64 n);
BigInt a1872(i64 n);
FieldElement a1024(i64 n);  // in Q(sqrt2)

/// Product over prime powers of the Hecke recursion with the expected eigenvalues.
FieldElement completion_coeff_from_eigenvalues(int level, int which, i64 n);

struct Extractor {
  std::string name;         // the eta-quotient it extracts
  EtaQuotientSpec spec;     // direct expansion
  int modulus;
  int residue;
};
/// The eta-quotients attached to each level, in the order the formulas list them.
std::vector<Extractor> level_extractors(int level);
/// Coefficient of q^n in extractor k of the level computed from the closed formula.
FieldElement extract_coeff(int level, int k, i64 n);
/// The same coefficient from the sign-factor form (1 +- (-1)^e) A / c.
FieldElement extract_coeff_alt(int level, int k, i64 n);
/// n <= bound where the two closed forms (t1 only, t1+t2) for q^7 E(q^12) E(q^156) differ.
std::vector<i64> flagged_1872(i64 bound);

/// Completion series for level (and which = 0..2 for the conjugate families of 47, 71).
QSeries completion_series(int level, int order, int which = 0);
int completion_count(int level);

/// Eigenvalue of the completion under T_p predicted from the classification of p.
FieldElement expected_eigenvalue(int level, int which, i64 p);

}  // namespace etaforms
