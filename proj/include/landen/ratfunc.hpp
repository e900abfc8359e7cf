#pragma once

#include <string>
#include <utility>
#include <vector>

#include "landen/poly.hpp"

namespace landen {

template <class T>
struct RatFunc {
  Poly<T> num;
  Poly<T> den;

  RatFunc() = default;
  RatFunc(Poly<T> n, Poly<T> d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw invalid_input("rational function with zero denominator");
  }

  template <class U>
  U operator()(const U& x) const {
    return num(x) / den(x);
  }
};

using QRatFunc = RatFunc<BigRat>;
using FRatFunc = RatFunc<BigFloat>;

// Numerator and denominator scaled jointly by one rational factor so that all
// coefficients are coprime integers and the denominator's leading coefficient
// is positive.
inline QRatFunc canonical(const QRatFunc& r) {
  BigInt l = 1, g = 0;
  auto scan = [&](const QPoly& p) {
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  };
  scan(r.num);
  scan(r.den);
  auto gscan = [&](const QPoly& p) {
    for (const auto& c : p.coeffs()) {
      BigInt v = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  };
  gscan(r.num);
  gscan(r.den);
  BigRat s = make_rat(l, g);
  if (sgn(r.den.lead()) < 0) s = -s;
  return {r.num * s, r.den * s};
}

// Floating canonical form: monic denominator.
inline FRatFunc canonical(const FRatFunc& r) {
  BigFloat s = r.den.lead();
  return {r.num / s, r.den / s};
}

// Divides out gcd(num, den).
template <class T>
RatFunc<T> reduced(const RatFunc<T>& r) {
  Poly<T> g = gcd(r.num, r.den);
  if (g.degree() <= 0) return r;
  return {poly_div_exact(r.num, g), poly_div_exact(r.den, g)};
}

// Largest decimal digit count among the canonical integer coefficients.
inline long coefficient_size(const QRatFunc& r) {
  QRatFunc c = canonical(r);
  long size = 1;
  for (const auto* p : {&c.num, &c.den})
    for (const auto& v : p->coeffs()) size = std::max(size, decimal_digits(v.get_num()));
  return size;
}

inline FRatFunc to_float(const QRatFunc& r, Digits d) { return {to_float(r.num, d), to_float(r.den, d)}; }

template <class T>
std::string to_string(const RatFunc<T>& r) {
  return "(" + to_string(r.num) + ") / (" + to_string(r.den) + ")";
}

}  // namespace landen
