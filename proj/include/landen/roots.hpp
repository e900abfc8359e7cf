#pragma once

#include <vector>

#include "landen/complex.hpp"
#include "landen/poly.hpp"

namespace landen {

// All complex roots of p by Aberth-Ehrlich simultaneous iteration.
inline std::vector<ComplexF> poly_roots(const FPoly& p, Digits d, int max_iter = 2000) {
  const int n = p.degree();
  if (n < 1) return {};
  FPoly dp = p.derivative();
  BigFloat radius(0L, d);
  for (int k = 0; k < n; ++k) {
    BigFloat r = root(abs(p[k] / p.lead()), static_cast<unsigned long>(n - k));
    if (r > radius) radius = r;
  }
  radius = radius * 2 + 1L;

  const BigFloat pi = const_pi(d);
  std::vector<ComplexF> z;
  for (int k = 0; k < n; ++k) {
    BigFloat t = pi * 2 * k / n + BigFloat(4L, d) / 10;
    z.push_back({radius * cos(t), radius * sin(t)});
  }
  const BigFloat tol = ten_pow(-(d.value - 5), d);
  for (int it = 0; it < max_iter; ++it) {
    BigFloat worst(0L, d);
    for (int k = 0; k < n; ++k) {
      ComplexF pv = p(z[static_cast<std::size_t>(k)]);
      if (is_zero(pv)) continue;
      ComplexF w = pv / dp(z[static_cast<std::size_t>(k)]);
      ComplexF s = make_complex(0, 0, d);
      for (int j = 0; j < n; ++j)
        if (j != k) s += make_complex(1, 0, d) / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      ComplexF step = w / (make_complex(1, 0, d) - w * s);
      z[static_cast<std::size_t>(k)] -= step;
      BigFloat rel = abs(step) / (abs(z[static_cast<std::size_t>(k)]) + 1L);
      if (rel > worst) worst = rel;
    }
    if (worst < tol) break;
  }
  return z;
}

}  // namespace landen
