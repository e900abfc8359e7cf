#pragma once

#include <vector>

#include "landen/bigfloat.hpp"

namespace landen {

// Three-point order estimates log(e[k+1]/e[k]) / log(e[k]/e[k-1]) for a
// sequence of error norms; the constant in e[k+1] ~ C e[k]^q cancels.
inline std::vector<double> fitted_orders(const std::vector<BigFloat>& e) {
  std::vector<double> q;
  for (std::size_t k = 1; k + 1 < e.size(); ++k) {
    if (is_zero(e[k - 1]) || is_zero(e[k]) || is_zero(e[k + 1])) continue;
    BigFloat num = log(e[k + 1] / e[k]);
    BigFloat den = log(e[k] / e[k - 1]);
    if (is_zero(den)) continue;
    q.push_back((num / den).to_double());
  }
  return q;
}

// Plain ratios log e[k+1] / log e[k] (meaningful once e[k] << 1).
inline std::vector<double> log_ratio_orders(const std::vector<BigFloat>& e) {
  std::vector<double> q;
  for (std::size_t k = 0; k + 1 < e.size(); ++k) {
    if (is_zero(e[k]) || is_zero(e[k + 1])) continue;
    q.push_back((log(e[k + 1]) / log(e[k])).to_double());
  }
  return q;
}

}  // namespace landen
