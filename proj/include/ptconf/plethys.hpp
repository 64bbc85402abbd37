#pragma once

// Truncated multigraded power series with rational-function coefficients,
// and the plethystic exponential / logarithm on them.

#include <map>
#include <stdexcept>
#include <string>

#include "ptconf/dimvector.hpp"
#include "ptconf/exactalg.hpp"

namespace ptconf {

/// Power series in commuting variables x_1..x_r whose monomials x^e are
/// kept only for e <= truncation (componentwise).
class GradedSeries {
 public:
  using Terms = std::map<DimVector, RationalFn>;

  explicit GradedSeries(DimVector truncation) : trunc_(std::move(truncation)) {
    for (int x : trunc_.entries())
      if (x < 0) throw std::invalid_argument("negative truncation bound");
  }

  static GradedSeries one(const DimVector& truncation) {
    GradedSeries s(truncation);
    s.add_term(DimVector(truncation.size(), 0), RationalFn(1));
    return s;
  }
  static GradedSeries monomial(const DimVector& truncation, const DimVector& exponent, const RationalFn& c) {
    GradedSeries s(truncation);
    s.add_term(exponent, c);
    return s;
  }

  std::size_t grading_rank() const { return trunc_.size(); }
  const DimVector& truncation() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest total degree that survives truncation.
  long max_total_degree() const { return trunc_.total(); }

  RationalFn coeff(const DimVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RationalFn() : it->second;
  }
  RationalFn constant_term() const { return coeff(DimVector(trunc_.size(), 0)); }

  /// Adds c*x^e; silently dropped when e exceeds the truncation.
  void add_term(const DimVector& e, const RationalFn& c) {
    if (e.size() != trunc_.size()) throw std::invalid_argument("exponent rank mismatch");
    if (!e.fits_in(trunc_) || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GradedSeries& operator+=(const GradedSeries& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  GradedSeries& operator-=(const GradedSeries& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }

  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    a.require_compatible(b);
    GradedSeries r(a.trunc_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        DimVector e = ea + eb;
        if (e.fits_in(a.trunc_)) r.add_term(e, ca * cb);
      }
    return r;
  }
  GradedSeries& operator*=(const GradedSeries& o) { return *this = *this * o; }

  GradedSeries scaled(const RationalFn& s) const {
    GradedSeries r(trunc_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  GradedSeries scaled(const Rational& s) const {
    GradedSeries r(trunc_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "[" + c.to_string() + "]x^" + e.to_string();
    }
    return s;
  }

 private:
  void require_compatible(const GradedSeries& o) const {
    if (o.trunc_ != trunc_) throw std::invalid_argument("graded series with different truncations");
  }

  DimVector trunc_;
  Terms terms_;
};

/// Adams operation: q -> q^i on coefficients and x^e -> x^(i e).
inline GradedSeries psi(const GradedSeries& f, long i) {
  if (i < 1) throw std::invalid_argument("psi needs i >= 1");
  if (!f.constant_term().is_zero()) throw std::domain_error("psi needs a series without constant term");
  if (i == 1) return f;
  GradedSeries r(f.truncation());
  for (const auto& [e, c] : f.terms()) {
    DimVector ie = static_cast<int>(i) * e;
    if (ie.fits_in(f.truncation())) r.add_term(ie, c.substitute_power(i));
  }
  return r;
}

/// exp(f) by the truncated Taylor series; f must have no constant term.
inline GradedSeries series_exp(const GradedSeries& f) {
  if (!f.constant_term().is_zero()) throw std::domain_error("exp needs a series without constant term");
  GradedSeries result = GradedSeries::one(f.truncation());
  GradedSeries term = result;
  for (long n = 1; n <= f.max_total_degree(); ++n) {
    term = (term * f).scaled(Rational(1, n));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

/// log(F) by the truncated series of log(1+g); F must have constant term 1.
inline GradedSeries series_log(const GradedSeries& F) {
  if (F.constant_term() != RationalFn(1)) throw std::domain_error("log needs constant term 1");
  GradedSeries g = F - GradedSeries::one(F.truncation());
  GradedSeries result(F.truncation());
  GradedSeries power = g;
  for (long n = 1; n <= F.max_total_degree() && !power.is_zero(); ++n) {
    result += power.scaled(Rational((n % 2) ? 1 : -1, n));
    power *= g;
  }
  return result;
}

/// Psi = sum_{i>=1} psi_i / i. Terms with i beyond the largest total degree
/// vanish under truncation, so the sum is finite.
inline GradedSeries adams_sum(const GradedSeries& f) {
  GradedSeries r(f.truncation());
  for (long i = 1; i <= f.max_total_degree(); ++i) r += psi(f, i).scaled(Rational(1, i));
  return r;
}

/// Inverse of adams_sum: sum_{i>=1} mu(i)/i psi_i.
inline GradedSeries adams_sum_inverse(const GradedSeries& f) {
  GradedSeries r(f.truncation());
  for (long i = 1; i <= f.max_total_degree(); ++i) {
    int mu = moebius(i);
    if (mu != 0) r += psi(f, i).scaled(Rational(mu, i));
  }
  return r;
}

/// Exp = exp o Psi.
inline GradedSeries pleth_exp(const GradedSeries& f) { return series_exp(adams_sum(f)); }

/// Log = Psi^(-1) o log.
inline GradedSeries pleth_log(const GradedSeries& F) { return adams_sum_inverse(series_log(F)); }

}  // namespace ptconf
