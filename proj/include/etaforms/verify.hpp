#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etaforms/formulas.hpp"
#include "etaforms/qseries.hpp"

namespace etaforms {

struct Discrepancy {
  int index = 0;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string suite;
  std::string params;  // no spaces, e.g. "m=1,s=2"
  int order = 0;
  bool pass = true;  // pass iff first_discrepancy is empty
  std::optional<Discrepancy> first_discrepancy;

  /// "SUITE PARAMS ORDER PASS" or "... FAIL@index".
  std::string line() const;
  /// key=value lines, terminated by a blank line.
  std::string record() const;
};

/// Compares lhs and rhs coefficientwise up to order.
VerificationReport compare_series(const std::string& suite, const std::string& params, const QSeries& lhs,
                                  const QSeries& rhs, int order);

// Theta-difference identities; each throws std::invalid_argument when its positivity
// constraint fails.
VerificationReport verify_thm1(int m, int s, int order);  // 24s - m > 0
VerificationReport verify_thm2(int m, int s, int order);  // 8s - m > 0
VerificationReport verify_thm3(int m, int k, int order);
VerificationReport verify_thm4(int m, int s, int order);

/// Right-hand side eta-quotient of the fourth identity with equal scales merged.
EtaQuotientSpec thm4_rhs_spec(int m, int s);

std::vector<VerificationReport> verify_builder_identities(int order);

/// Predicted T_p image of B(F) for a class pair representative, or nullopt where no rule
/// is implemented (conductor primes of -1024 and -1872).
std::optional<QSeries> predicted_hecke_image(i64 d, i64 p, const Form& F, int order);
std::vector<VerificationReport> verify_hecke_tables(i64 d, i64 prime_bound, int order);

std::vector<VerificationReport> verify_completion_eigen(int level, i64 prime_bound, int order);

/// h(q) of the level-1872 construction (Q = q^12), before adding 2 q^7 E(Q) E(Q^13).
QSeries gordon_hughes_h(int order);
/// The simplified four-term sum that should equal the principal-genus theta combination.
QSeries gordon_hughes_simplified(int order);
/// Negative controls at p = 7, 11, 17 and the simplified-sum identity. Needs order >= 2000.
std::vector<VerificationReport> verify_gordon_hughes(int order);

/// [q^{mn}] = [q^m][q^n] for coprime m, n >= 2 with mn <= order, for every completion.
std::vector<VerificationReport> verify_table1_multiplicativity(int order);

/// Surrogate for the shared-genus claim: (6m,m,s) and (6m,5m,s+m) represent exactly the
/// same residue classes mod 24sm. The report's order field carries the modulus.
VerificationReport verify_genus_support(int m, int s);

const std::vector<std::string>& suite_names();  // excludes "all"
int default_suite_order(const std::string& suite);
/// Runs a suite (or "all") with up to jobs worker threads. Reports come back in a fixed
/// order independent of jobs. order <= 0 selects each suite's default.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<VerificationReport> run_suite(const std::string& suite, int order, int jobs);

}  // namespace etaforms
