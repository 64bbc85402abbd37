#pragma once

// Exact arithmetic: Laurent polynomials in q^(1/2) with rational
// coefficients, reduced rational functions, big binomials, and the
// exp/log transfer between coefficient sequences.

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptconf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms.
inline Rational frac(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// "p/q", or just "p" when the denominator is one.
inline std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  r.canonicalize();
  return r;
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Binomial coefficient. Zero when k < 0 or k > n >= 0; for negative n the
/// usual extension (-1)^k C(k-n-1, k).
inline BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  BigInt r;
  if (n >= 0) {
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : BigInt(-r);
}

/// Möbius function.
inline int moebius(long n) {
  if (n < 1) throw std::invalid_argument("moebius of non-positive integer");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// ---------------------------------------------------------------------------
// LaurentHalf
// ---------------------------------------------------------------------------

/// Laurent polynomial in t = q^(1/2) with rational coefficients. Exponents
/// are stored in units of q^(1/2), so q itself has exponent 2. No stored
/// coefficient is zero.
class LaurentHalf {
 public:
  using Map = std::map<long, Rational>;

  LaurentHalf() = default;
  LaurentHalf(long c) { set(0, Rational(c)); }
  LaurentHalf(const Rational& c) { set(0, c); }

  static LaurentHalf from_map(Map m) {
    LaurentHalf r;
    r.c_ = std::move(m);
    r.canonicalize();
    return r;
  }
  /// c * q^(half_exp/2)
  static LaurentHalf monomial(const Rational& c, long half_exp) {
    LaurentHalf r;
    r.set(half_exp, c);
    return r;
  }
  static LaurentHalf q_half_power(long half_exp) { return monomial(Rational(1), half_exp); }
  /// (-q^(1/2))^k for any integer k.
  static LaurentHalf neg_sqrt_q_power(long k) {
    return monomial(Rational((k % 2 == 0) ? 1 : -1), k);
  }

  const Map& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t term_count() const { return c_.size(); }
  Rational coeff(long half_exp) const {
    auto it = c_.find(half_exp);
    return it == c_.end() ? Rational(0) : it->second;
  }
  long min_exp() const { require_nonzero(); return c_.begin()->first; }
  long max_exp() const { require_nonzero(); return c_.rbegin()->first; }

  LaurentHalf& operator+=(const LaurentHalf& o) {
    for (const auto& [e, c] : o.c_) add_to(e, c);
    return *this;
  }
  LaurentHalf& operator-=(const LaurentHalf& o) {
    for (const auto& [e, c] : o.c_) add_to(e, -c);
    return *this;
  }
  LaurentHalf& operator*=(const LaurentHalf& o) { return *this = *this * o; }
  LaurentHalf& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& [e, c] : c_) c *= s;
    return *this;
  }

  friend LaurentHalf operator+(LaurentHalf a, const LaurentHalf& b) { return a += b; }
  friend LaurentHalf operator-(LaurentHalf a, const LaurentHalf& b) { return a -= b; }
  friend LaurentHalf operator-(LaurentHalf a) {
    for (auto& [e, c] : a.c_) c = -c;
    return a;
  }
  friend LaurentHalf operator*(const LaurentHalf& a, const LaurentHalf& b) {
    LaurentHalf r;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) r.add_to(ea + eb, ca * cb);
    return r;
  }
  friend LaurentHalf operator*(LaurentHalf a, const Rational& s) { return a *= s; }
  friend LaurentHalf operator*(const Rational& s, LaurentHalf a) { return a *= s; }
  friend bool operator==(const LaurentHalf&, const LaurentHalf&) = default;

  LaurentHalf pow(unsigned long n) const {
    LaurentHalf result(1), base = *this;
    while (n) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

  /// Multiplies by q^(half_exp/2).
  LaurentHalf shifted(long half_exp) const {
    LaurentHalf r;
    for (const auto& [e, c] : c_) r.c_.emplace_hint(r.c_.end(), e + half_exp, c);
    return r;
  }

  /// q -> q^i, i.e. every exponent e becomes i*e.
  LaurentHalf substitute_power(long i) const {
    if (i < 1) throw std::invalid_argument("substitute_power needs i >= 1");
    LaurentHalf r;
    for (const auto& [e, c] : c_) r.c_.emplace_hint(r.c_.end(), e * i, c);
    return r;
  }

  /// q -> q^(-1).
  LaurentHalf invert_variable() const {
    LaurentHalf r;
    for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
    return r;
  }

  bool is_palindromic() const { return *this == invert_variable(); }

  /// Value at q^(1/2) = 1.
  Rational eval_at_one() const {
    Rational s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
  }

  /// Value at q = x; only defined when every exponent is an integer power of q.
  Rational eval_at_q(const Rational& x) const {
    Rational s = 0;
    for (const auto& [e, c] : c_) {
      if (e % 2 != 0) throw std::domain_error("half-integer power of q in eval_at_q");
      long k = e / 2;
      Rational p = 1;
      Rational base = (k >= 0) ? x : Rational(1 / x);
      for (long j = 0; j < std::labs(k); ++j) p *= base;
      s += c * p;
    }
    return s;
  }

  /// Coefficients from the lowest to the highest exponent. When every
  /// exponent has the same parity the step is one power of q, otherwise one
  /// power of q^(1/2); gaps are filled with zeros.
  std::vector<Rational> coefficient_list() const {
    std::vector<Rational> out;
    if (c_.empty()) return out;
    long lo = min_exp(), hi = max_exp();
    long step = 2;
    for (const auto& [e, c] : c_)
      if ((e - lo) % 2 != 0) step = 1;
    for (long e = lo; e <= hi; e += step) out.push_back(coeff(e));
    return out;
  }

  std::string to_string() const;

 private:
  void set(long e, const Rational& c) {
    if (c != 0) c_[e] = c;
  }
  void add_to(long e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = c_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  void canonicalize() {
    for (auto it = c_.begin(); it != c_.end();) {
      it->second.canonicalize();
      if (it->second == 0)
        it = c_.erase(it);
      else
        ++it;
    }
  }
  void require_nonzero() const {
    if (c_.empty()) throw std::domain_error("exponent of the zero polynomial");
  }

  Map c_;
};

/// Returns the canonical form of x (a fresh copy through the canonicalizing
/// constructor).
inline LaurentHalf canonical(const LaurentHalf& x) { return LaurentHalf::from_map(x.coeffs()); }

inline LaurentHalf substitute_power(const LaurentHalf& a, long i) { return a.substitute_power(i); }
inline LaurentHalf invert_variable(const LaurentHalf& a) { return a.invert_variable(); }
inline Rational eval_at_one(const LaurentHalf& a) { return a.eval_at_one(); }

inline std::string LaurentHalf::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rational c = it->second;
    long e = it->first;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    std::string mono;
    if (e != 0) {
      mono = "q";
      if (e != 2) mono += (e % 2 == 0) ? "^" + std::to_string(e / 2) : "^(" + std::to_string(e) + "/2)";
    }
    if (mono.empty())
      s += ptconf::to_string(a);
    else if (a == 1)
      s += mono;
    else
      s += ptconf::to_string(a) + "*" + mono;
  }
  return s;
}

/// Shifted Poincaré polynomial of P^n: sum_{i=0..n} (-q^(1/2))^(n-2i).
/// n = -1 (the empty projective space) gives 0.
inline LaurentHalf quantum_proj(long n) {
  if (n < -1) throw std::invalid_argument("quantum_proj needs n >= -1");
  LaurentHalf r;
  for (long i = 0; i <= n; ++i) r += LaurentHalf::neg_sqrt_q_power(n - 2 * i);
  return r;
}

/// Euler characteristic of a variety of complex dimension dim_c from its
/// shifted Poincaré polynomial: chi = (-1)^dim * P(q^(1/2)=1).
inline BigInt euler_from_shifted(const LaurentHalf& p, long dim_c) {
  if (dim_c < 0) throw std::invalid_argument("negative dimension");
  Rational v = p.eval_at_one();
  if (dim_c % 2) v = -v;
  if (v.get_den() != 1) throw std::domain_error("non-integral Euler characteristic: " + to_string(v));
  return v.get_num();
}

// ---------------------------------------------------------------------------
// Dense one-variable polynomials over Q, used for gcd reduction.
// ---------------------------------------------------------------------------

namespace detail {

using Dense = std::vector<Rational>;  // index = degree in t

inline void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void make_monic(Dense& p) {
  if (p.empty()) return;
  Rational lc = p.back();
  if (lc == 1) return;
  for (auto& c : p) c /= lc;
}

/// a = q*b + r; b must be nonzero.
inline void divmod(const Dense& a, const Dense& b, Dense& q, Dense& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational f = r.back() / lb;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

inline Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

/// Splits x = t^shift * P(t) with P(0) != 0.
inline Dense to_dense(const LaurentHalf& x, long& shift) {
  Dense d;
  if (x.is_zero()) {
    shift = 0;
    return d;
  }
  shift = x.min_exp();
  d.assign(static_cast<std::size_t>(x.max_exp() - shift + 1), Rational(0));
  for (const auto& [e, c] : x.coeffs()) d[static_cast<std::size_t>(e - shift)] = c;
  return d;
}

inline LaurentHalf from_dense(const Dense& d, long shift) {
  LaurentHalf::Map m;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) m.emplace_hint(m.end(), static_cast<long>(i) + shift, d[i]);
  return LaurentHalf::from_map(std::move(m));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// RationalFn
// ---------------------------------------------------------------------------

/// Reduced quotient num/den of Laurent polynomials in q^(1/2).
///
/// Canonical form: den is a monic polynomial in q^(1/2) with nonzero
/// constant term (any monomial factor lives in num), and num, den are
/// coprime. Zero is 0/1.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}
  RationalFn(const Rational& c) : num_(c), den_(1) {}
  RationalFn(LaurentHalf p) : num_(std::move(p)), den_(1) {}
  RationalFn(LaurentHalf num, LaurentHalf den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const LaurentHalf& num() const { return num_; }
  const LaurentHalf& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentHalf(1); }

  const LaurentHalf& as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("rational function is not a Laurent polynomial: " + to_string());
    return num_;
  }

  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a) {
    RationalFn r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return RationalFn();
    if (a.is_polynomial() && b.is_polynomial()) return RationalFn(a.num_ * b.num_);
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn operator*(const RationalFn& a, const Rational& s) {
    if (s == 0) return RationalFn();
    RationalFn r = a;
    r.num_ *= s;
    return r;
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFn&, const RationalFn&) = default;

  RationalFn substitute_power(long i) const {
    return RationalFn(num_.substitute_power(i), den_.substitute_power(i));
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentHalf(1);
      return;
    }
    long sn, sd;
    detail::Dense n = detail::to_dense(num_, sn);
    detail::Dense d = detail::to_dense(den_, sd);
    if (d.size() > 1) {
      detail::Dense g = detail::gcd(n, d);
      if (g.size() > 1) {
        detail::Dense q, r;
        detail::divmod(n, g, q, r);
        n = std::move(q);
        detail::divmod(d, g, q, r);
        d = std::move(q);
      }
    }
    Rational lc = d.back();
    if (lc != 1)
      for (auto& c : n) c /= lc;
    detail::make_monic(d);
    num_ = detail::from_dense(n, sn - sd);
    den_ = detail::from_dense(d, 0);
  }

  LaurentHalf num_;
  LaurentHalf den_;
};

inline RationalFn substitute_power(const RationalFn& a, long i) { return a.substitute_power(i); }

// ---------------------------------------------------------------------------
// Sequences and the exp/log transfer
// ---------------------------------------------------------------------------

/// A finite sequence (x_1, ..., x_n); element k of the vector holds x_{k+1}.
template <class T>
using RatSeq = std::vector<T>;

/// Given b, returns a with 1 + sum a_n t^n = exp(sum b_n t^n), computed by
/// n a_n = sum_{k=1..n} k b_k a_{n-k} (a_0 = 1).
template <class T>
RatSeq<T> seq_exp_transfer(const RatSeq<T>& b) {
  const std::size_t n = b.size();
  std::vector<T> a(n + 1, T(0));
  a[0] = T(1);
  for (std::size_t i = 1; i <= n; ++i) {
    T acc(0);
    for (std::size_t k = 1; k <= i; ++k) acc += T(b[k - 1] * a[i - k]) * Rational(static_cast<long>(k));
    a[i] = acc * Rational(1, static_cast<long>(i));
  }
  return RatSeq<T>(a.begin() + 1, a.end());
}

/// Inverse of seq_exp_transfer.
template <class T>
RatSeq<T> seq_log_transfer(const RatSeq<T>& a) {
  const std::size_t n = a.size();
  auto A = [&](std::size_t i) -> T { return i == 0 ? T(1) : a[i - 1]; };
  RatSeq<T> b(n, T(0));
  for (std::size_t i = 1; i <= n; ++i) {
    T acc = A(i) * Rational(static_cast<long>(i));
    for (std::size_t k = 1; k < i; ++k) acc -= T(b[k - 1] * A(i - k)) * Rational(static_cast<long>(k));
    b[i - 1] = acc * Rational(1, static_cast<long>(i));
  }
  return b;
}

/// sum_{k>=1} 1/k! sum_{a_1+...+a_k = n, a_i > 0} f(a_1)...f(a_k), evaluated
/// through the convolution powers of the sequence f(1), f(2), ...
template <class T>
T composition_exp_sum(long n, const std::function<T(long)>& f) {
  if (n < 1) throw std::invalid_argument("composition_exp_sum needs n >= 1");
  std::vector<T> base(static_cast<std::size_t>(n) + 1, T(0));
  for (long a = 1; a <= n; ++a) base[a] = f(a);
  std::vector<T> power = base;  // k-fold convolution power
  T total = power[n];
  BigInt kfact = 1;
  for (long k = 2; k <= n; ++k) {
    std::vector<T> next(static_cast<std::size_t>(n) + 1, T(0));
    for (long i = k - 1; i <= n; ++i) {
      if (power[i] == T(0)) continue;
      for (long j = 1; i + j <= n; ++j) next[i + j] += T(power[i] * base[j]);
    }
    power = std::move(next);
    kfact *= k;
    total += T(power[n] * Rational(BigInt(1), kfact));
  }
  return total;
}

}  // namespace ptconf
