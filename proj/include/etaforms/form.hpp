#pragma once

#include <ostream>
#include <string>

#include "etaforms/ntheory.hpp"

namespace etaforms {

/// Binary quadratic form ax^2 + bxy + cy^2.
struct Form {
  i64 a = 1, b = 0, c = 1;

  i64 discriminant() const { return b * b - 4 * a * c; }
  bool positive_definite() const { return a > 0 && discriminant() < 0; }
  bool primitive() const { return gcd(gcd(a, b), c) == 1; }
  i64 value(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }
  Form opposite() const { return {a, -b, c}; }

  std::string to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }

  friend bool operator==(const Form&, const Form&) = default;
  friend auto operator<=>(const Form&, const Form&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Form& f) { return os << f.to_string(); }
};

}  // namespace etaforms
