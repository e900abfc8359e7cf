#pragma once

#include <random>

#include "landen/landen_half.hpp"
#include "landen/ratfunc.hpp"
#include "landen/sturm.hpp"

namespace landen {

inline BigRat random_rat(std::mt19937_64& rng, long lo_num, long hi_num, long max_den) {
  std::uniform_int_distribution<long> n(lo_num, hi_num), dd(1, max_den);
  return make_rat(n(rng), dd(rng));
}

// (x - u)^2 + v^2 with u in [-2, 2], v in [1/2, 2].
inline QPoly random_positive_quadratic(std::mt19937_64& rng) {
  BigRat u = random_rat(rng, -8, 8, 4);
  BigRat v = random_rat(rng, 2, 8, 4);
  if (v < make_rat(1, 2)) v = make_rat(1, 2);
  return QPoly{BigRat(u * u + v * v), BigRat(-2 * u), BigRat(1)};
}

// Random integrand B/A with deg A = p, deg B <= p-2, A without real roots
// (certified by Sturm) and B positive definite plus a small perturbation, so
// the integral stays away from zero.
inline QRatFunc random_line_integrand(std::mt19937_64& rng, int p) {
  for (;;) {
    QPoly a = QPoly::constant(random_rat(rng, 1, 5, 3));
    for (int k = 0; k < p / 2; ++k) a = a * random_positive_quadratic(rng);
    QPoly b = QPoly::constant(random_rat(rng, 1, 9, 4));
    for (int k = 0; k < (p - 2) / 2; ++k) b = b * random_positive_quadratic(rng);
    std::vector<BigRat> jitter;
    for (int k = 0; k <= p - 3; ++k) jitter.push_back(random_rat(rng, -3, 3, 10) / 10);
    b = b + QPoly(std::move(jitter));
    if (sturm_real_root_count(a) == 0 && !b.is_zero()) return {b, a};
  }
}

// Point of Lambda_6 with a + b + 2 > 0 and a positive numerator, kept a
// little inside the region so the half-line quadrature stays cheap.
inline half::SexticParams<BigRat> random_lambda6_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> ab(-16, 64), num(0, 40);
  for (;;) {
    BigRat a = make_rat(ab(rng), 8), b = make_rat(ab(rng), 8);
    if (!half::in_lambda6(a, b) || a + b + 2 <= 0) continue;
    if (!half::in_lambda6(BigRat(a - make_rat(1, 2)), BigRat(b - make_rat(1, 2)))) continue;
    BigRat c = make_rat(num(rng), 8), d = make_rat(num(rng), 8), e = make_rat(num(rng) + 1, 8);
    return {a, b, c, d, e};
  }
}

}  // namespace landen
