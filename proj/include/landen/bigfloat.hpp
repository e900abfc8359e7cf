#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace landen {

// Working precision in decimal digits.
struct Digits {
  long value = 16;
};

// Two 64-bit guard words on top of the requested digits.
inline constexpr mpfr_prec_t kGuardBits = 128;

inline mpfr_prec_t bits_for(Digits d) {
  const long digits = std::max<long>(d.value, 16);
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) +
         kGuardBits;
}

// RAII wrapper over mpfr_t.
//
// A default-constructed value is a "free" zero: it has no precision of its own
// and adopts the precision of whatever it is combined with. Everything else
// carries the precision it was created with, and binary results take the
// smaller precision of the two operands.
class BigFloat {
 public:
  BigFloat() : digits_{16}, free_(true) {
    mpfr_init2(v_, 256);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long v, Digits d) : digits_(d), free_(false) {
    mpfr_init2(v_, bits_for(d));
    mpfr_set_si(v_, v, MPFR_RNDN);
  }
  BigFloat(int v, Digits d) : BigFloat(static_cast<long>(v), d) {}
  BigFloat(double v, Digits d) : digits_(d), free_(false) {
    mpfr_init2(v_, bits_for(d));
    mpfr_set_d(v_, v, MPFR_RNDN);
  }
  BigFloat(const mpz_class& z, Digits d) : digits_(d), free_(false) {
    mpfr_init2(v_, bits_for(d));
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  BigFloat(const mpq_class& q, Digits d) : digits_(d), free_(false) {
    mpfr_init2(v_, bits_for(d));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const std::string& s, Digits d) : digits_(d), free_(false) {
    mpfr_init2(v_, bits_for(d));
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw std::invalid_argument("not a decimal number: " + s);
    }
  }
  // Re-round an existing value to another precision.
  BigFloat(const BigFloat& x, Digits d) : digits_(d), free_(false) {
    mpfr_init2(v_, bits_for(d));
    mpfr_set(v_, x.v_, MPFR_RNDN);
  }

  BigFloat(const BigFloat& o) : digits_(o.digits_), free_(o.free_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept : digits_(o.digits_), free_(o.free_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
      digits_ = o.digits_;
      free_ = o.free_;
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    std::swap(digits_, o.digits_);
    std::swap(free_, o.free_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  Digits precision() const { return digits_; }
  bool is_free() const { return free_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Decimal string with `sig` significant digits (0 = full working precision).
  std::string str(long sig = 0) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (sig <= 0) sig = digits_.value;
    char* buf = nullptr;
    const std::string fmt = "%." + std::to_string(sig) + "Rg";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  // Shortest decimal that reads back to the same bits at this precision.
  std::string exact_str() const {
    if (mpfr_nan_p(v_) || mpfr_inf_p(v_)) return str();
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    std::string sign;
    if (digits[0] == '-') {
      sign = "-";
      digits.erase(0, 1);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    if (e - 1 != 0) out += "e" + std::to_string(static_cast<long>(e - 1));
    return out;
  }

  // Result holder for a binary operation between a and b.
  static BigFloat result_for(const BigFloat& a, const BigFloat& b) {
    if (a.free_ && b.free_) return BigFloat();
    if (a.free_) return blank(b.digits_);
    if (b.free_) return blank(a.digits_);
    return blank(a.digits_.value <= b.digits_.value ? a.digits_ : b.digits_);
  }
  static BigFloat result_for(const BigFloat& a) { return a.free_ ? BigFloat() : blank(a.digits_); }

  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r = result_for(a, b);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r = result_for(a, b);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r = result_for(a, b);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r = result_for(a, b);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r = result_for(a);
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend BigFloat operator+(const BigFloat& a, long b) {
    BigFloat r = result_for(a);
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator+(long b, const BigFloat& a) { return a + b; }
  friend BigFloat operator-(const BigFloat& a, long b) {
    BigFloat r = result_for(a);
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(long b, const BigFloat& a) {
    BigFloat r = result_for(a);
    mpfr_si_sub(r.v_, b, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r = result_for(a);
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(long b, const BigFloat& a) { return a * b; }
  friend BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r = result_for(a);
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(long b, const BigFloat& a) {
    BigFloat r = result_for(a);
    mpfr_si_div(r.v_, b, a.v_, MPFR_RNDN);
    return r;
  }

  friend BigFloat operator+(const BigFloat& a, const mpq_class& q) {
    BigFloat r = result_for(a);
    mpfr_add_q(r.v_, a.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  friend BigFloat operator+(const mpq_class& q, const BigFloat& a) { return a + q; }
  friend BigFloat operator-(const BigFloat& a, const mpq_class& q) {
    BigFloat r = result_for(a);
    mpfr_sub_q(r.v_, a.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const mpq_class& q) {
    BigFloat r = result_for(a);
    mpfr_mul_q(r.v_, a.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const mpq_class& q, const BigFloat& a) { return a * q; }
  friend BigFloat operator/(const BigFloat& a, const mpq_class& q) {
    BigFloat r = result_for(a);
    mpfr_div_q(r.v_, a.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }

  friend BigFloat operator+(const BigFloat& a, int b) { return a + static_cast<long>(b); }
  friend BigFloat operator+(int b, const BigFloat& a) { return a + static_cast<long>(b); }
  friend BigFloat operator-(const BigFloat& a, int b) { return a - static_cast<long>(b); }
  friend BigFloat operator-(int b, const BigFloat& a) { return static_cast<long>(b) - a; }
  friend BigFloat operator*(const BigFloat& a, int b) { return a * static_cast<long>(b); }
  friend BigFloat operator*(int b, const BigFloat& a) { return a * static_cast<long>(b); }
  friend BigFloat operator/(const BigFloat& a, int b) { return a / static_cast<long>(b); }
  friend BigFloat operator/(int b, const BigFloat& a) { return static_cast<long>(b) / a; }

  // Guard against silent double -> long truncation.
  friend BigFloat operator+(const BigFloat&, double) = delete;
  friend BigFloat operator+(double, const BigFloat&) = delete;
  friend BigFloat operator-(const BigFloat&, double) = delete;
  friend BigFloat operator-(double, const BigFloat&) = delete;
  friend BigFloat operator*(const BigFloat&, double) = delete;
  friend BigFloat operator*(double, const BigFloat&) = delete;
  friend BigFloat operator/(const BigFloat&, double) = delete;
  friend BigFloat operator/(double, const BigFloat&) = delete;
  friend bool operator<(const BigFloat&, double) = delete;
  friend bool operator>(const BigFloat&, double) = delete;

  friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend bool operator<(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

  friend bool operator==(const BigFloat& a, int b) { return a == static_cast<long>(b); }
  friend bool operator<(const BigFloat& a, int b) { return a < static_cast<long>(b); }
  friend bool operator>(const BigFloat& a, int b) { return a > static_cast<long>(b); }
  friend bool operator<=(const BigFloat& a, int b) { return a <= static_cast<long>(b); }
  friend bool operator>=(const BigFloat& a, int b) { return a >= static_cast<long>(b); }

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

 private:
  static BigFloat blank(Digits d) {
    BigFloat r;
    mpfr_set_prec(r.v_, bits_for(d));
    r.digits_ = d;
    r.free_ = false;
    return r;
  }

  mpfr_t v_;
  Digits digits_;
  bool free_;
};

namespace detail {
template <class F>
BigFloat unary(const BigFloat& x, F f) {
  BigFloat r = BigFloat::result_for(x);
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline BigFloat sqrt(const BigFloat& x) { return detail::unary(x, mpfr_sqrt); }
inline BigFloat cbrt(const BigFloat& x) { return detail::unary(x, mpfr_cbrt); }
inline BigFloat exp(const BigFloat& x) { return detail::unary(x, mpfr_exp); }
inline BigFloat log(const BigFloat& x) { return detail::unary(x, mpfr_log); }
inline BigFloat log10(const BigFloat& x) { return detail::unary(x, mpfr_log10); }
inline BigFloat sin(const BigFloat& x) { return detail::unary(x, mpfr_sin); }
inline BigFloat cos(const BigFloat& x) { return detail::unary(x, mpfr_cos); }
inline BigFloat tan(const BigFloat& x) { return detail::unary(x, mpfr_tan); }
inline BigFloat cot(const BigFloat& x) { return detail::unary(x, mpfr_cot); }
inline BigFloat atan(const BigFloat& x) { return detail::unary(x, mpfr_atan); }
inline BigFloat sinh(const BigFloat& x) { return detail::unary(x, mpfr_sinh); }
inline BigFloat cosh(const BigFloat& x) { return detail::unary(x, mpfr_cosh); }
inline BigFloat tanh(const BigFloat& x) { return detail::unary(x, mpfr_tanh); }
inline BigFloat abs(const BigFloat& x) { return detail::unary(x, mpfr_abs); }
inline BigFloat floor(const BigFloat& x) {
  BigFloat r = BigFloat::result_for(x);
  mpfr_floor(r.get(), x.get());
  return r;
}

inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r = BigFloat::result_for(y, x);
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

// arccot with range (0, pi).
inline BigFloat acot(const BigFloat& y) {
  BigFloat one(1L, y.precision());
  return atan2(one, y);
}

// Real n-th root; odd n accepts negative input.
inline BigFloat root(const BigFloat& x, unsigned long n) {
  BigFloat r = BigFloat::result_for(x);
  mpfr_rootn_ui(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

inline BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r = BigFloat::result_for(x, y);
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

inline BigFloat pow(const BigFloat& x, long n) {
  BigFloat r = BigFloat::result_for(x);
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

inline BigFloat const_pi(Digits d) {
  BigFloat r(0L, d);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

inline BigFloat pi_like(const BigFloat& x) { return const_pi(x.precision()); }

inline int sgn(const BigFloat& x) { return mpfr_sgn(x.get()); }
inline bool is_zero(const BigFloat& x) { return mpfr_zero_p(x.get()) != 0; }
inline bool isfinite(const BigFloat& x) { return mpfr_number_p(x.get()) != 0; }

// 10^-k at precision d.
inline BigFloat ten_pow(long k, Digits d) {
  BigFloat ten(10L, d);
  return pow(ten, k);
}

// Number of leading decimal digits on which a and b agree, relative to |a|.
inline long agreeing_digits(const BigFloat& a, const BigFloat& b) {
  BigFloat diff = abs(a - b);
  if (is_zero(diff)) return std::min(a.precision().value, b.precision().value);
  BigFloat scale = abs(a);
  if (is_zero(scale)) scale = BigFloat(1L, a.precision());
  return static_cast<long>(std::floor(-log10(diff / scale).to_double()));
}

}  // namespace landen
