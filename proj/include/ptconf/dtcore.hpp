#pragma once

// Donaldson-Thomas invariants of a quiver with stability, extracted by the
// plethystic logarithm, and the two routes to Poincaré polynomials of
// framed moduli of subspace-quiver representations.

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ptconf/exactalg.hpp"
#include "ptconf/plethys.hpp"
#include "ptconf/quiverkit.hpp"

namespace ptconf {

struct DtResult {
  std::map<DimVector, LaurentHalf> dt;

  const LaurentHalf& at(const DimVector& d) const {
    auto it = dt.find(d);
    if (it == dt.end()) throw std::out_of_range("no DT invariant for " + d.to_string());
    return it->second;
  }
};

namespace detail {

inline LaurentHalf dt_prefactor() {  // q^(-1/2) - q^(1/2)
  return LaurentHalf::q_half_power(-1) - LaurentHalf::q_half_power(1);
}

inline std::vector<DimVector> symmetric_slope_lattice(const Quiver& Q, const Stability& s, const DimVector& cap) {
  if (cap.is_zero()) throw std::invalid_argument("cap must be nonzero");
  std::vector<DimVector> lattice = lambda_plus(Q, s, s.slope(cap), cap);
  if (!check_symmetric(Q, lattice))
    throw std::domain_error("Euler form is not symmetric on the slope lattice of " + cap.to_string());
  return lattice;
}

}  // namespace detail

/// DT_d for every d in Lambda^+ (the nonzero e <= cap of slope mu(cap)), from
///   1 + sum (-q^(1/2))^<d,d> P_d x^d = Exp( sum DT_d x^d / (q^(-1/2)-q^(1/2)) ).
/// Throws if the Euler form is not symmetric there or if some DT_d comes out
/// as a non-polynomial rational function.
inline DtResult dt_invariants(const Quiver& Q, const Stability& s, const DimVector& cap) {
  const auto lattice = detail::symmetric_slope_lattice(Q, s, cap);
  GradedSeries series = GradedSeries::one(cap);
  for (const auto& e : lattice) {
    RationalFn c = hn_stack_poly(Q, s, e) * RationalFn(LaurentHalf::neg_sqrt_q_power(euler_form(Q, e, e)));
    series.add_term(e, c);
  }
  GradedSeries log = pleth_log(series);
  DtResult out;
  const RationalFn pre(detail::dt_prefactor());
  for (const auto& e : lattice) {
    RationalFn v = log.coeff(e) * pre;
    if (!v.is_polynomial())
      throw std::logic_error("DT invariant at " + e.to_string() + " is not a Laurent polynomial: " + v.to_string());
    out.dt.emplace(e, v.num());
  }
  return out;
}

/// Right-hand side of the framed identity
///   1 + sum P_{M^fr_{d,n}} (-1)^(n.d) x^d = Exp( sum P_{P^(n.d-1)} DT_d (-1)^(n.d) x^d ),
/// i.e. the coefficient of x^d is (-1)^(n.d) times the shifted Poincaré
/// polynomial of the n-framed moduli space.
inline GradedSeries framed_gen_series(const Quiver& Q, const Stability& s, const DimVector& framing, const DimVector& cap) {
  if (framing.size() != cap.size()) throw std::invalid_argument("framing does not match quiver");
  const DtResult dt = dt_invariants(Q, s, cap);
  GradedSeries f(cap);
  for (const auto& [e, value] : dt.dt) {
    long nd = 0;
    for (std::size_t i = 0; i < e.size(); ++i) nd += static_cast<long>(framing[i]) * e[i];
    LaurentHalf c = quantum_proj(nd - 1) * value;
    if (nd % 2) c = -c;
    f.add_term(e, RationalFn(c));
  }
  return pleth_exp(f);
}

/// Reads P_{M^fr} at d off a framed_gen_series result.
inline LaurentHalf framed_poincare(const GradedSeries& framed, const DimVector& framing, const DimVector& d) {
  long nd = 0;
  for (std::size_t i = 0; i < d.size(); ++i) nd += static_cast<long>(framing[i]) * d[i];
  LaurentHalf p = framed.coeff(d).as_polynomial();
  return (nd % 2) ? LaurentHalf(-p) : p;
}

/// DT invariant of the subspace quiver Q_m at (1,...,1; d) for the stability
/// (d/g,...,d/g; -m/g), g = gcd(d,m), computed in the source-symmetrized
/// ring.
///
/// The slope-zero lattice below (1^m; d) is {d(I, a d/g) : |I| = a m/g}.
/// Truncating at source degree one makes every x_{i_k} square to zero, so
/// psi_i (i >= 2) kills all terms and Exp reduces to exp. Symmetric
/// elements sum_{|I|=s} x_I multiply like y^s/s!, so grade a is stored with
/// its coefficient divided by (a m/g)! and an ordinary one-variable log
/// applies.
inline LaurentHalf subspace_dt(int d, int m) {
  if (d < 1 || m < 1) throw std::invalid_argument("subspace_dt needs d, m >= 1");
  const int g = std::gcd(d, m), dbar = d / g, mbar = m / g;
  GradedSeries series = GradedSeries::one(DimVector{g});
  for (int a = 1; a <= g; ++a) {
    const int M = a * mbar, D = a * dbar;
    const long form = M + static_cast<long>(D) * D - static_cast<long>(M) * D;
    RationalFn c = subspace_hn_stack_poly(M, D, dbar, -mbar) * RationalFn(LaurentHalf::neg_sqrt_q_power(form));
    series.add_term(DimVector{a}, c * Rational(BigInt(1), factorial(M)));
  }
  GradedSeries log = series_log(series);
  RationalFn v = log.coeff(DimVector{g}) * RationalFn(detail::dt_prefactor()) * Rational(factorial(m));
  if (!v.is_polynomial())
    throw std::logic_error("subspace DT for (" + std::to_string(d) + "," + std::to_string(m) + ") is not a Laurent polynomial");
  return v.num();
}

/// Closed recursion for the framed moduli of m points in P^(d-1):
///   P_{M^fr_{d,m}} = sum_k m!/k! sum_{a_1+..+a_k=g} prod_i
///                    P_{P^(a_i dbar - 1)} P_{a_i dbar, a_i mbar} / (a_i mbar)!
inline LaurentHalf framed_closed(int d, int m) {
  if (d < 1 || d >= m) throw std::invalid_argument("framed_closed needs 1 <= d < m");
  const int g = std::gcd(d, m), dbar = d / g, mbar = m / g;
  std::function<LaurentHalf(long)> part = [&](long a) {
    LaurentHalf p = quantum_proj(a * dbar - 1) * subspace_dt(static_cast<int>(a * dbar), static_cast<int>(a * mbar));
    return p * Rational(BigInt(1), factorial(a * mbar));
  };
  return composition_exp_sum<LaurentHalf>(g, part) * Rational(factorial(m));
}

}  // namespace ptconf
