#pragma once

#include <vector>

#include "landen/poly.hpp"

namespace landen {

inline std::vector<QPoly> sturm_chain(const QPoly& a) {
  if (a.is_zero()) throw invalid_input("Sturm chain of the zero polynomial");
  std::vector<QPoly> chain{a, a.derivative()};
  while (!chain.back().is_zero()) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

namespace detail {

inline int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline int changes_at(const std::vector<QPoly>& chain, const BigRat& x) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(sgn(p(x)));
  return sign_changes(s);
}

inline int changes_at_pos_inf(const std::vector<QPoly>& chain) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(p.is_zero() ? 0 : sgn(p.lead()));
  return sign_changes(s);
}

inline int changes_at_neg_inf(const std::vector<QPoly>& chain) {
  std::vector<int> s;
  for (const auto& p : chain) {
    int v = p.is_zero() ? 0 : sgn(p.lead());
    s.push_back(p.degree() % 2 ? -v : v);
  }
  return sign_changes(s);
}

// Drop the factor x^k so that 0 is not a root.
inline QPoly strip_zero_roots(QPoly a) {
  int k = 0;
  while (k <= a.degree() && is_zero(a[k])) ++k;
  if (k == 0) return a;
  std::vector<BigRat> c(a.coeffs().begin() + k, a.coeffs().end());
  return QPoly(std::move(c));
}

}  // namespace detail

// Number of distinct real roots.
inline int sturm_real_root_count(const QPoly& a) {
  auto chain = sturm_chain(a);
  return detail::changes_at_neg_inf(chain) - detail::changes_at_pos_inf(chain);
}

// Number of distinct roots in the open interval (0, inf).
inline int sturm_positive_root_count(const QPoly& a) {
  QPoly b = detail::strip_zero_roots(a);
  auto chain = sturm_chain(b);
  return detail::changes_at(chain, BigRat(0)) - detail::changes_at_pos_inf(chain);
}

// Number of distinct roots in the half-open interval (lo, hi].
inline int sturm_interval_root_count(const QPoly& a, const BigRat& lo, const BigRat& hi) {
  auto chain = sturm_chain(a);
  return detail::changes_at(chain, lo) - detail::changes_at(chain, hi);
}

// A real root of `a` certified by a sign change on a rational interval, for
// error messages that name the offending root.
inline std::pair<BigRat, BigRat> isolate_a_real_root(const QPoly& a) {
  auto chain = sturm_chain(a);
  BigRat bound = 1;
  for (const auto& c : a.coeffs()) bound += abs(c / a.lead());
  BigRat lo = -bound, hi = bound;
  for (int it = 0; it < 60; ++it) {
    BigRat mid = (lo + hi) / 2;
    if (detail::changes_at(chain, lo) - detail::changes_at(chain, mid) > 0)
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

}  // namespace landen
