#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "landen/bigfloat.hpp"

namespace landen {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// An algebraic invariant of an algorithm failed to hold.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};
struct divisibility_error : internal_error {
  using internal_error::internal_error;
};

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw invalid_input("zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline BigRat make_rat(long num, long den = 1) { return make_rat(BigInt(num), BigInt(den)); }

// Parses "p", "p/q", "-p/q" or a terminating decimal "1.25".
inline BigRat parse_rat(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    BigRat q;
    if (q.set_str(s, 10) != 0) throw invalid_input("not a rational: " + s);
    if (q.get_den() == 0) throw invalid_input("zero denominator: " + s);
    q.canonicalize();
    return q;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const std::size_t frac = s.size() - dot - 1;
  BigInt num;
  if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0)
    throw invalid_input("not a decimal: " + s);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
  return make_rat(num, den);
}

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<BigRat> {
  static constexpr bool exact = true;
};

template <>
struct scalar_traits<BigFloat> {
  static constexpr bool exact = false;
};

inline bool is_zero(const BigRat& x) { return sgn(x) == 0; }

// Constant v in the same scalar family as `like`.
inline BigRat lift(long v, const BigRat&) { return BigRat(v); }
inline BigFloat lift(long v, const BigFloat& like) {
  if (like.is_free()) return BigFloat(v, Digits{64});
  return BigFloat(v, like.precision());
}
inline BigRat lift_rat(const BigRat& q, const BigRat&) { return q; }
inline BigFloat lift_rat(const BigRat& q, const BigFloat& like) { return BigFloat(q, like.precision()); }

inline BigRat exact_quotient(const BigRat& a, const BigRat& b) { return a / b; }
inline BigFloat exact_quotient(const BigFloat& a, const BigFloat& b) { return a / b; }

inline BigFloat to_float(const BigRat& q, Digits d) { return BigFloat(q, d); }

// Number of decimal digits of |z| (at least 1).
inline long decimal_digits(const BigInt& z) {
  if (z == 0) return 1;
  return static_cast<long>(BigInt(abs(z)).get_str().size());
}

template <class T>
T ipow(const T& x, long n) {
  T r = lift(1, x);
  T b = x;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Generalized binomial C(x, k) for rational x.
inline BigRat binomial(const BigRat& x, long k) {
  if (k < 0) return 0;
  BigRat r = 1;
  for (long i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
  return r;
}

}  // namespace landen
