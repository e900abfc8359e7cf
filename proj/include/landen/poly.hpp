#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "landen/scalar.hpp"

namespace landen {

template <class T>
class Poly;
template <class T>
bool is_zero(const Poly<T>& p);

// Dense univariate polynomial; coeffs()[k] is the coefficient of x^k.
// The zero polynomial has no coefficients.
template <class T>
class Poly {
 public:
  using coeff_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }

  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly monomial(T v, int k) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = std::move(v);
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  T coeff(int k) const {
    if (k < 0 || k > degree()) return T{};
    return c_[static_cast<std::size_t>(k)];
  }
  const T& lead() const { return c_.back(); }

  // Horner evaluation; U may be a wider type than T (e.g. complex).
  template <class U>
  U operator()(const U& x) const {
    if (c_.empty()) return x * 0;
    U acc = x * 0 + c_.back();
    for (int k = degree() - 1; k >= 0; --k) acc = acc * x + c_[static_cast<std::size_t>(k)];
    return acc;
  }

  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<T> d;
    d.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return Poly(std::move(d));
  }

  // this(q(x))
  Poly compose(const Poly& q) const {
    Poly acc;
    for (int k = degree(); k >= 0; --k) acc = acc * q + constant(c_[static_cast<std::size_t>(k)]);
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<T> r(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (k < a.c_.size() && k < b.c_.size())
        r[k] = a.c_[k] + b.c_[k];
      else
        r[k] = k < a.c_.size() ? a.c_[k] : b.c_[k];
    }
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<T> r;
    r.reserve(a.c_.size());
    for (const T& v : a.c_) r.push_back(-v);
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1);
    std::vector<bool> set(r.size(), false);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        T t = a.c_[i] * b.c_[j];
        if (set[i + j]) {
          r[i + j] = r[i + j] + t;
        } else {
          r[i + j] = std::move(t);
          set[i + j] = true;
        }
      }
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const T& s) {
    std::vector<T> r;
    r.reserve(a.c_.size());
    for (const T& v : a.c_) r.push_back(v * s);
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, const Poly& a) { return a * s; }
  friend Poly operator/(const Poly& a, const T& s) {
    std::vector<T> r;
    r.reserve(a.c_.size());
    for (const T& v : a.c_) r.push_back(exact_quotient(v, s));
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && landen::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using QPoly = Poly<BigRat>;
using FPoly = Poly<BigFloat>;

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.is_zero();
}

template <class T>
Poly<T> lift(long v, const Poly<T>& like) {
  if (like.is_zero()) return Poly<T>::constant(T(v));
  return Poly<T>::constant(lift(v, like.lead()));
}

inline QPoly poly_x() { return QPoly{BigRat(0), BigRat(1)}; }

// Ascending integer coefficients to a rational polynomial.
inline QPoly make_qpoly(std::initializer_list<long> c) {
  std::vector<BigRat> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

template <class U, class T, class F>
Poly<U> map_coeffs(const Poly<T>& p, F f) {
  std::vector<U> c;
  c.reserve(p.coeffs().size());
  for (const T& v : p.coeffs()) c.push_back(f(v));
  return Poly<U>(std::move(c));
}

inline FPoly to_float(const QPoly& p, Digits d) {
  return map_coeffs<BigFloat>(p, [&](const BigRat& q) { return BigFloat(q, d); });
}

// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw invalid_input("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<T> q(static_cast<std::size_t>(dq) + 1);
  for (int k = dq; k >= 0; --k) {
    T t = r[static_cast<std::size_t>(k + db)] / b.lead();
    q[static_cast<std::size_t>(k)] = t;
    for (int j = 0; j < db; ++j)
      r[static_cast<std::size_t>(k + j)] = r[static_cast<std::size_t>(k + j)] - t * b[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, ring operations only.
// The eliminated top coefficient is dropped structurally, never by cancellation.
template <class T>
Poly<T> prem(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw invalid_input("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  int e = a.degree() - db + 1;
  std::vector<T> r = a.coeffs();
  const T& lb = b.lead();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    T lr = r.back();
    r.pop_back();
    for (auto& v : r) v = v * lb;
    const int shift = dr - db;
    for (int j = 0; j < db; ++j)
      r[static_cast<std::size_t>(shift + j)] = r[static_cast<std::size_t>(shift + j)] - lr * b[j];
    --e;
    while (!r.empty() && is_zero(r.back())) r.pop_back();
  }
  Poly<T> rem(std::move(r));
  if (e > 0) rem = rem * ipow(lb, e);
  return rem;
}

template <class T>
Poly<T> poly_div_exact(const Poly<T>& e, const Poly<T>& a);

// Exact quotient in the ring of polynomials; used by the subresultant scheme.
template <class T>
Poly<T> exact_quotient(const Poly<T>& e, const Poly<T>& a) {
  return poly_div_exact(e, a);
}

// Z with e = a*Z. A nonzero remainder means an upstream algebraic bug.
// Over a non-field coefficient ring the quotient is built with exact
// coefficient divisions.
template <class T>
Poly<T> poly_div_exact(const Poly<T>& e, const Poly<T>& a) {
  if (a.is_zero()) throw invalid_input("division by the zero polynomial");
  if (e.is_zero()) return Poly<T>();
  if (e.degree() < a.degree()) throw divisibility_error("exact division: nonzero remainder");
  std::vector<T> r = e.coeffs();
  const int da = a.degree();
  const int dq = e.degree() - da;
  std::vector<T> q(static_cast<std::size_t>(dq) + 1);
  for (int k = dq; k >= 0; --k) {
    T t = exact_quotient(r[static_cast<std::size_t>(k + da)], a.lead());
    for (int j = 0; j <= da; ++j)
      r[static_cast<std::size_t>(k + j)] = r[static_cast<std::size_t>(k + j)] - t * a[j];
    q[static_cast<std::size_t>(k)] = std::move(t);
  }
  for (int k = 0; k < da; ++k)
    if (!is_zero(r[static_cast<std::size_t>(k)]))
      throw divisibility_error("exact division: nonzero remainder");
  return Poly<T>(std::move(q));
}

template <class T>
Poly<T> monic(const Poly<T>& p) {
  if (p.is_zero()) return p;
  return p / p.lead();
}

// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Inverse of a modulo m (both over a field, coprime).
template <class T>
Poly<T> inverse_mod(const Poly<T>& a, const Poly<T>& m) {
  Poly<T> r0 = m, r1 = divmod(a, m).second;
  Poly<T> s0, s1 = Poly<T>::constant(lift(1, m.lead()));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly<T> s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw internal_error("inverse_mod: arguments share a factor");
  return divmod(s0 / r0.lead(), m).second;
}

// Interpolating polynomial through (xs[i], ys[i]) via divided differences.
template <class T>
Poly<T> interpolate(const std::vector<T>& xs, const std::vector<T>& ys) {
  const std::size_t n = xs.size();
  if (n == 0 || ys.size() != n) throw invalid_input("interpolate: bad sample sets");
  std::vector<T> d = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - j]);
  Poly<T> p = Poly<T>::constant(d[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    Poly<T> lin{-xs[i], lift(1, xs[i])};
    p = p * lin + Poly<T>::constant(d[i]);
  }
  return p;
}

// Powers sums s_k = sum r_i^k (k < count) of the roots of a monic polynomial t,
// from Newton's identities.
template <class T>
std::vector<T> power_sums(const Poly<T>& t, int count) {
  const int n = t.degree();
  // e_i = (-1)^i * coefficient of x^(n-i)
  std::vector<T> e(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) e[static_cast<std::size_t>(i)] = (i % 2 ? -t[n - i] : t[n - i]);
  std::vector<T> s;
  s.push_back(lift(n, t.lead()));
  for (int k = 1; k < count; ++k) {
    T v = lift(0, t.lead());
    if (k <= n) v = e[static_cast<std::size_t>(k)] * static_cast<long>(k);
    if (k % 2 == 0) v = -v;
    for (int i = 1; i < k && i <= n; ++i) {
      T term = e[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
      if (i % 2)
        v = v + term;
      else
        v = v - term;
    }
    s.push_back(v);
  }
  return s;
}

template <class T>
std::string to_string(const Poly<T>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const T& c = p[k];
    if (is_zero(c)) continue;
    std::ostringstream cs;
    cs << c;
    std::string s = cs.str();
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (k == 0 || s != "1") os << s;
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace landen
