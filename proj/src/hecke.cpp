#include "etaforms/hecke.hpp"

#include <stdexcept>

namespace etaforms {

QSeries apply_Tp(const QSeries& s, i64 d, i64 p) {
  if (!is_prime(p)) throw std::invalid_argument("apply_Tp: " + std::to_string(p) + " is not prime");
  if (s.order() < p) {
    throw std::invalid_argument("apply_Tp: series order " + std::to_string(s.order()) + " is below p = " +
                                std::to_string(p));
  }
  const int chi = kronecker(d, p);
  const int m = static_cast<int>(s.order() / p);
  QSeries out(s.field(), m);
  for (int n = 0; n <= m; ++n) {
    FieldElement v = s[static_cast<int>(n * p)];
    if (chi != 0 && n % p == 0) {
      const FieldElement& tail = s[static_cast<int>(n / p)];
      if (chi > 0) v += tail; else v -= tail;
    }
    out.set(n, v);
  }
  return out;
}

std::optional<FieldElement> eigen_check(const QSeries& s, i64 d, i64 p) {
  const QSeries image = apply_Tp(s, d, p);
  const int m = image.order();
  std::optional<int> lead;
  for (int n = 0; n <= m; ++n) {
    if (!s[n].is_zero()) {
      lead = n;
      break;
    }
  }
  if (!lead) {
    throw std::domain_error("eigen_check: series vanishes up to the comparison order " + std::to_string(m));
  }
  const FieldElement lambda = image[*lead] / s[*lead];
  for (int n = 0; n <= m; ++n) {
    if (!(image[n] == lambda * s[n])) return std::nullopt;
  }
  return lambda;
}

FieldElement coeff_recursion(const FieldElement& h_p, int chi, int k) {
  if (k < 0) throw std::invalid_argument("coeff_recursion: negative exponent");
  if (chi < -1 || chi > 1) throw std::invalid_argument("coeff_recursion: chi must be -1, 0 or 1");
  FieldElement prev = FieldElement::integer(h_p.field(), 1);
  if (k == 0) return prev;
  FieldElement cur = h_p;
  for (int j = 1; j < k; ++j) {
    FieldElement next = h_p * cur;
    if (chi != 0) next -= prev * Rational(chi);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace etaforms
