#include "etaforms/bqf.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace etaforms {

namespace {

struct Egcd {
  i64 u, v, g;
};

// u*a + v*b = g >= 0
Egcd egcd(i64 a, i64 b) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_s, -old_t, -old_r};
  return {old_s, old_t, old_r};
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_definite(const Form& F, const char* who) {
  if (!F.positive_definite()) {
    throw std::invalid_argument(std::string(who) + ": form " + F.to_string() + " is not positive definite");
  }
}

}  // namespace

Form transform(const Form& F, const SL2& m) {
  const i64 a = F.a, b = F.b, c = F.c;
  return {a * m.a * m.a + b * m.a * m.c + c * m.c * m.c,
          2 * a * m.a * m.b + b * (m.a * m.d + m.b * m.c) + 2 * c * m.c * m.d,
          a * m.b * m.b + b * m.b * m.d + c * m.d * m.d};
}

bool is_valid_discriminant(i64 d) {
  const i64 r = mod(d, 4);
  return d < 0 && (r == 0 || r == 1);
}

bool is_reduced(const Form& F) {
  if (!F.positive_definite()) return false;
  if (std::abs(F.b) > F.a || F.a > F.c) return false;
  if ((std::abs(F.b) == F.a || F.a == F.c) && F.b < 0) return false;
  return true;
}

Reduction reduce_with_matrix(const Form& F) {
  require_definite(F, "reduce");
  Form f = F;
  SL2 m;
  for (;;) {
    if (f.b <= -f.a || f.b > f.a) {
      const i64 k = floor_div(f.a - f.b, 2 * f.a);
      const SL2 t{1, k, 0, 1};
      f = transform(f, t);
      m = m * t;
    }
    if (f.a > f.c) {
      const SL2 s{0, -1, 1, 0};
      f = transform(f, s);
      m = m * s;
      continue;
    }
    break;
  }
  if (f.a == f.c && f.b < 0) {
    const SL2 s{0, -1, 1, 0};
    f = transform(f, s);
    m = m * s;
  }
  return {f, m};
}

Form reduce(const Form& F) { return reduce_with_matrix(F).form; }

Form compose(const Form& f, const Form& g) {
  require_definite(f, "compose");
  require_definite(g, "compose");
  if (f.discriminant() != g.discriminant()) {
    throw std::invalid_argument("compose: discriminant mismatch " + f.to_string() + " vs " + g.to_string());
  }
  if (!f.primitive() || !g.primitive()) throw std::invalid_argument("compose: imprimitive input");
  const i64 D = f.discriminant();
  Form f1 = f, f2 = g;
  if (f1.a > f2.a) std::swap(f1, f2);
  const i64 a1 = f1.a, b1 = f1.b;
  const i64 a2 = f2.a, b2 = f2.b, c2 = f2.c;
  const i64 s = (b1 + b2) / 2;
  const i64 n = b2 - s;
  i64 y1, d;
  if (a2 % a1 == 0) {
    y1 = 0;
    d = a1;
  } else {
    const Egcd e = egcd(a2, a1);
    y1 = e.u;
    d = e.g;
  }
  i64 x2, y2, d1;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    const Egcd e = egcd(s, d);
    x2 = e.u;
    y2 = -e.v;
    d1 = e.g;
  }
  const i64 v1 = a1 / d1, v2 = a2 / d1;
  const i64 r = mod(static_cast<i64>((static_cast<__int128>(y1) * y2 * n - static_cast<__int128>(x2) * c2) % v1), v1);
  const i64 b3 = b2 + 2 * v2 * r;
  const i64 a3 = v1 * v2;
  const i64 c3 = (b3 * b3 - D) / (4 * a3);
  return reduce({a3, b3, c3});
}

int ClassGroup::index_of(const Form& F) const {
  if (F.discriminant() != discriminant) {
    throw std::invalid_argument("class group " + std::to_string(discriminant) + ": form " + F.to_string() +
                                " has discriminant " + std::to_string(F.discriminant()));
  }
  const Form r = reduce(F);
  auto it = std::find(classes.begin(), classes.end(), r);
  if (it == classes.end()) throw std::invalid_argument("class group: form " + F.to_string() + " is imprimitive");
  return static_cast<int>(it - classes.begin());
}

int ClassGroup::inverse(int i) const { return index_of(classes.at(i).opposite()); }

int ClassGroup::element_order(int i) const {
  int k = 1;
  for (int x = i; x != identity(); x = table[x][i]) ++k;
  return k;
}

std::string ClassGroup::structure_string() const {
  std::string s;
  for (std::size_t i = 0; i < structure.size(); ++i) {
    if (i) s += " x ";
    s += "C" + std::to_string(structure[i]);
  }
  return s.empty() ? "C1" : s;
}

ClassGroup enumerate_class_group(i64 d) {
  if (!is_valid_discriminant(d)) {
    throw std::invalid_argument("invalid discriminant " + std::to_string(d) + ": need d < 0 and d = 0,1 mod 4");
  }
  ClassGroup g;
  g.discriminant = d;
  for (i64 a = 1; 3 * a * a <= -d; ++a) {
    for (i64 b = -a; b <= a; ++b) {
      if (mod(b - d, 2) != 0) continue;
      if ((b * b - d) % (4 * a) != 0) continue;
      const Form F{a, b, (b * b - d) / (4 * a)};
      if (is_reduced(F) && F.primitive()) g.classes.push_back(F);
    }
  }
  std::sort(g.classes.begin(), g.classes.end(), [](const Form& x, const Form& y) {
    return std::make_tuple(x.a, std::abs(x.b), -x.b) < std::make_tuple(y.a, std::abs(y.b), -y.b);
  });
  const int h = g.size();
  g.table.assign(h, std::vector<int>(h));
  for (int i = 0; i < h; ++i) {
    for (int j = i; j < h; ++j) {
      g.table[i][j] = g.table[j][i] = g.index_of(compose(g.classes[i], g.classes[j]));
    }
  }
  // Greedy: repeatedly add the highest-order element meeting the current subgroup trivially.
  std::vector<int> subgroup{g.identity()};
  while (static_cast<int>(subgroup.size()) < h) {
    int best = -1, best_order = 0;
    for (int x = 0; x < h; ++x) {
      const int ord = g.element_order(x);
      if (ord <= best_order) continue;
      bool trivial = true;
      for (int y = x; y != g.identity(); y = g.table[y][x]) {
        if (std::find(subgroup.begin(), subgroup.end(), y) != subgroup.end()) {
          trivial = false;
          break;
        }
      }
      if (trivial) {
        best = x;
        best_order = ord;
      }
    }
    if (best < 0) throw std::logic_error("class group structure search failed");
    std::vector<int> next;
    for (int s : subgroup) {
      int y = s;
      for (int k = 0; k < best_order; ++k) {
        next.push_back(y);
        y = g.table[y][best];
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    subgroup = std::move(next);
    g.structure.push_back(best_order);
    g.generators.push_back(best);
  }
  return g;
}

namespace {

// Calls visit(x, y) for every solution of F(x,y) = n.
template <class Visit>
void for_each_representation(const Form& F, i64 n, Visit visit) {
  require_definite(F, "rep_count");
  if (n < 0) return;
  if (n == 0) {
    visit(0, 0);
    return;
  }
  const i64 absd = -F.discriminant();
  const i64 ymax = isqrt(static_cast<i64>((static_cast<__int128>(4) * F.a * n) / absd));
  for (i64 y = -ymax; y <= ymax; ++y) {
    // a x^2 + (b y) x + (c y^2 - n) = 0
    const __int128 disc = static_cast<__int128>(4) * F.a * n - static_cast<__int128>(absd) * y * y;
    if (disc < 0) continue;
    const i64 s = isqrt(static_cast<i64>(disc));
    if (static_cast<__int128>(s) * s != disc) continue;
    for (i64 num : {-F.b * y + s, -F.b * y - s}) {
      if (num % (2 * F.a) == 0) visit(num / (2 * F.a), y);
      if (s == 0) break;
    }
  }
}

}  // namespace

i64 rep_count(const Form& F, i64 n) {
  i64 count = 0;
  for_each_representation(F, n, [&](i64, i64) { ++count; });
  return count;
}

std::optional<std::pair<i64, i64>> rep_witness(const Form& F, i64 n) {
  std::optional<std::pair<i64, i64>> best;
  // Prefer the witness with smallest |y|, then largest x, for stable output.
  for_each_representation(F, n, [&](i64 x, i64 y) {
    if (!best || std::make_tuple(std::abs(y), -y, -x) <
                     std::make_tuple(std::abs(best->second), -best->second, -best->first)) {
      best = std::make_pair(x, y);
    }
  });
  return best;
}

int unit_count(i64 d) {
  if (d == -3) return 6;
  if (d == -4) return 4;
  return 2;
}

i64 conductor(i64 d) {
  if (!is_valid_discriminant(d)) throw std::invalid_argument("conductor: invalid discriminant " + std::to_string(d));
  i64 best = 1;
  for (i64 f = 2; f * f <= -d; ++f) {
    if (d % (f * f) != 0) continue;
    if (is_valid_discriminant(d / (f * f))) best = f;
  }
  return best;
}

std::string GenusCharacter::label() const {
  return prime_on_top ? "(p/" + std::to_string(k) + ")" : "(" + std::to_string(k) + "/p)";
}

std::vector<GenusCharacter> character_system(i64 d) {
  switch (d) {
    case -47: return {{-47, false}};
    case -71: return {{-71, false}};
    case -135: return {{5, true}, {3, true}};
    case -648: return {{3, true}, {-2, false}};
    case -1024: return {{-1, false}, {2, false}};
    case -1872: return {{3, true}, {13, true}, {-1, false}};
    default: throw std::invalid_argument("no genus character system for discriminant " + std::to_string(d));
  }
}

std::vector<i64> represented_primes(const Form& F, int count, i64 bound) {
  require_definite(F, "represented_primes");
  const i64 d = F.discriminant();
  std::vector<i64> out;
  for (i64 p = 2; p <= bound && static_cast<int>(out.size()) < count; p = next_prime(p)) {
    if ((2 * d) % p == 0) continue;
    if (rep_count(F, p) > 0) out.push_back(p);
  }
  return out;
}

i64 smallest_represented_prime(const Form& F, i64 bound) {
  auto ps = represented_primes(F, 1, bound);
  if (ps.empty()) {
    throw std::runtime_error("no prime up to " + std::to_string(bound) + " represented by " + F.to_string());
  }
  return ps.front();
}

std::vector<int> genus_characters(const Form& F, const std::vector<GenusCharacter>& chars) {
  const i64 p = smallest_represented_prime(F);
  std::vector<int> out;
  for (const auto& ch : chars) out.push_back(ch.eval(p));
  return out;
}

std::vector<int> genus_characters(const Form& F) {
  return genus_characters(F, character_system(F.discriminant()));
}

}  // namespace etaforms
