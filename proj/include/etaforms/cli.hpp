#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "etaforms/qseries.hpp"

namespace etaforms::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct RunOptions {
  /// Replaces the closed-form coefficient used by `coeff` (tests inject faults through this).
  std::function<FieldElement(int level, i64 n)> formula;
};

/// Closed-form [q^n] of the level's target series: a(n) for 47 and 71, the completion
/// coefficient for the other levels.
FieldElement formula_coefficient(int level, i64 n);
/// The same coefficient read off a direct expansion.
FieldElement oracle_coefficient(int level, i64 n);

/// args excludes the program name. Output goes to out unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const RunOptions& options = {});
int run(int argc, char** argv);

/// Parses "J:S^R,S^R,..." (R defaults to 1), e.g. "2:1,47" or "1:16^2,8^-1,64^2,128^-1".
/// Throws std::invalid_argument on malformed text.
EtaQuotientSpec parse_eta_spec(const std::string& text);
Form parse_form(const std::string& text);  // "a,b,c"

}  // namespace etaforms::cli
