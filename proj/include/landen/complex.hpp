#pragma once

#include "landen/bigfloat.hpp"
#include "landen/scalar.hpp"

namespace landen {

// Paired-scalar complex number; only what point evaluation needs.
template <class T>
struct Complex {
  T re;
  T im;

  Complex() = default;
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const T& r) : re(r), im(r * 0) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    T d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend Complex operator+(const Complex& a, const T& s) { return {a.re + s, a.im}; }
  friend Complex operator-(const Complex& a, const T& s) { return {a.re - s, a.im}; }
  friend Complex operator*(const Complex& a, const T& s) { return {a.re * s, a.im * s}; }
  friend Complex operator*(const T& s, const Complex& a) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const T& s) { return {a.re / s, a.im / s}; }
  friend Complex operator*(const Complex& a, long s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, long s) { return {a.re / s, a.im / s}; }

  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

using ComplexF = Complex<BigFloat>;

inline ComplexF make_complex(long re, long im, Digits d) { return {BigFloat(re, d), BigFloat(im, d)}; }

inline BigFloat norm2(const ComplexF& z) { return z.re * z.re + z.im * z.im; }
inline BigFloat abs(const ComplexF& z) { return sqrt(norm2(z)); }
inline ComplexF conj(const ComplexF& z) { return {z.re, -z.im}; }

// Principal square root (branch cut on the negative real axis).
inline ComplexF sqrt(const ComplexF& z) {
  BigFloat r = abs(z);
  if (is_zero(r)) return z;
  BigFloat u = sqrt((r + abs(z.re)) / 2);
  if (z.re >= 0L) return {u, z.im / (u * 2)};
  BigFloat v = z.im >= 0L ? u : -u;
  return {abs(z.im) / (u * 2), v};
}

inline ComplexF exp(const ComplexF& z) {
  BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

inline bool is_zero(const ComplexF& z) { return is_zero(z.re) && is_zero(z.im); }

inline ComplexF lift(long v, const ComplexF& like) {
  return {lift(v, like.re), lift(0, like.re)};
}

}  // namespace landen
