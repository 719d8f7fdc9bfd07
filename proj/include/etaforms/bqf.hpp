#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etaforms/form.hpp"

namespace etaforms {

/// Substitution (x,y) -> (a x + b y, c x + d y).
struct SL2 {
  i64 a = 1, b = 0, c = 0, d = 1;
  i64 det() const { return a * d - b * c; }
  friend SL2 operator*(const SL2& m, const SL2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend bool operator==(const SL2&, const SL2&) = default;
};

/// F(a x + b y, c x + d y) as a form in x, y.
Form transform(const Form& F, const SL2& m);

inline i64 discriminant(const Form& F) { return F.discriminant(); }
bool is_valid_discriminant(i64 d);  // d < 0 and d = 0,1 mod 4
bool is_reduced(const Form& F);

struct Reduction {
  Form form;
  SL2 matrix;  // transform(F, matrix) == form
};
Reduction reduce_with_matrix(const Form& F);
Form reduce(const Form& F);

/// Dirichlet composition of primitive forms of equal discriminant, reduced.
Form compose(const Form& f, const Form& g);

struct ClassGroup {
  i64 discriminant = 0;
  std::vector<Form> classes;     // reduced, sorted by (a, |b|, -b)
  std::vector<int> structure;    // cyclic factor orders, non-increasing
  std::vector<int> generators;   // indices into classes
  std::vector<std::vector<int>> table;  // table[i][j] = index of classes[i]*classes[j]

  int size() const { return static_cast<int>(classes.size()); }
  /// Index of the class containing F; throws std::invalid_argument if F is foreign.
  int index_of(const Form& F) const;
  int identity() const { return 0; }
  int inverse(int i) const;
  int element_order(int i) const;
  std::string structure_string() const;  // "C4 x C4"
};

/// Throws std::invalid_argument for d >= 0 or d = 2,3 mod 4.
ClassGroup enumerate_class_group(i64 d);

/// #{(x,y) : F(x,y) = n}.
i64 rep_count(const Form& F, i64 n);
std::optional<std::pair<i64, i64>> rep_witness(const Form& F, i64 n);

/// Number of automorphs: 6, 4 or 2.
int unit_count(i64 d);

/// Largest f with d/f^2 still a discriminant.
i64 conductor(i64 d);

/// A Kronecker symbol used as a genus character: (p/k) when prime_on_top, else (k/p).
struct GenusCharacter {
  i64 k = 1;
  bool prime_on_top = true;
  int eval(i64 p) const { return prime_on_top ? kronecker(p, k) : kronecker(k, p); }
  std::string label() const;
};

/// Character system attached to each discriminant handled here; throws std::invalid_argument otherwise.
std::vector<GenusCharacter> character_system(i64 d);

/// Smallest prime p not dividing 2d with F representing p, searching up to bound.
/// Throws std::runtime_error if none is found.
i64 smallest_represented_prime(const Form& F, i64 bound = 100000);
std::vector<i64> represented_primes(const Form& F, int count, i64 bound = 100000);

std::vector<int> genus_characters(const Form& F, const std::vector<GenusCharacter>& chars);
std::vector<int> genus_characters(const Form& F);

}  // namespace etaforms
