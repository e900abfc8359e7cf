#pragma once

#include <utility>

#include "landen/poly.hpp"

namespace landen {

// Res(A, B) by the subresultant algorithm (no content extraction), generic
// over any integral domain with exact division: BigRat, BigFloat, Poly<BigRat>.
// Sign convention matches the Sylvester determinant: lc(A)^deg B * prod B(alpha_i).
template <class T>
T resultant(Poly<T> a, Poly<T> b) {
  if (a.is_zero() && b.is_zero()) throw invalid_input("resultant of two zero polynomials");
  if (a.is_zero()) return lift(0, b.lead());
  if (b.is_zero()) return lift(0, a.lead());

  T one = lift(1, a.lead());
  T g = one, h = one;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    Poly<T> r = prem(a, b);
    a = std::move(b);
    b = r / (g * ipow(h, delta));
    g = a.lead();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_quotient(ipow(g, delta), ipow(h, delta - 1));
    }
  }
  if (b.is_zero()) return lift(0, a.lead());
  const int da = a.degree();
  T res = exact_quotient(ipow(b.lead(), da), ipow(h, da - 1));
  return s < 0 ? -res : res;
}

// Res_z(A(z), F(z, x)) for F with polynomial-in-x coefficients.
template <class T>
Poly<T> resultant_poly(const Poly<T>& a, const Poly<Poly<T>>& f) {
  std::vector<Poly<T>> ca;
  for (const T& c : a.coeffs()) ca.push_back(Poly<T>::constant(c));
  return resultant(Poly<Poly<T>>(std::move(ca)), f);
}

}  // namespace landen
