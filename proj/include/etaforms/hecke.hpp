#pragma once

#include <optional>

#include "etaforms/qseries.hpp"

namespace etaforms {

/// sum_n [h(pn) + (d/p) h(n/p)] q^n, at order floor(N/p).
/// Throws std::invalid_argument if p is not prime or the input order is below p.
QSeries apply_Tp(const QSeries& s, i64 d, i64 p);

/// lambda with T_p s = lambda s up to order floor(N/p), if one exists in the field of s.
/// Every available index must agree. Throws std::domain_error when s vanishes to that order.
std::optional<FieldElement> eigen_check(const QSeries& s, i64 d, i64 p);

/// h(p^k) from h(p) = h_p, h(1) = 1 and h(p^{k+1}) = h_p h(p^k) - chi h(p^{k-1}).
FieldElement coeff_recursion(const FieldElement& h_p, int chi, int k);

}  // namespace etaforms
