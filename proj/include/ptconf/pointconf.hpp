#pragma once

// Moduli spaces M_{d,m} of m ordered points in P^(d-1): Poincaré polynomials
// through DT invariants of subspace quivers, the recursions they satisfy,
// and a finite-field point count to check them against.

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ptconf/dtcore.hpp"
#include "ptconf/exactalg.hpp"
#include "ptconf/quiverkit.hpp"

namespace ptconf {

struct ConfigSpec {
  int d = 1;
  int m = 2;
  int g = 1;
  int dbar = 1;
  int mbar = 2;

  static ConfigSpec make(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("configuration needs d, m >= 1");
    ConfigSpec c;
    c.d = d;
    c.m = m;
    c.g = std::gcd(d, m);
    c.dbar = d / c.g;
    c.mbar = m / c.g;
    return c;
  }
  bool nonempty() const { return d < m; }
  long dimension() const { return static_cast<long>(m - d - 1) * (d - 1); }
};

inline long moduli_dimension(int d, int m) { return ConfigSpec::make(d, m).dimension(); }

struct SubspaceSetup {
  Quiver quiver;
  DimVector dim;
  Stability stability;
};

/// Q_m, d = (1,...,1; d), theta = dbar * sum i_k^* - mbar * j^*, so theta(d) = 0.
inline SubspaceSetup subspace_setup(const ConfigSpec& cfg) {
  std::vector<int> dim(cfg.m, 1);
  dim.push_back(cfg.d);
  std::vector<long> theta(cfg.m, cfg.dbar);
  theta.push_back(-cfg.mbar);
  return {Quiver::subspace(cfg.m), DimVector(std::move(dim)), Stability(std::move(theta))};
}

namespace detail {
inline void require_nonempty(int d, int m) {
  if (d < 1 || d >= m)
    throw std::domain_error("M_{" + std::to_string(d) + "," + std::to_string(m) + "} is empty (need 1 <= d < m)");
}
}  // namespace detail

/// Shifted intersection-cohomology Poincaré polynomial P_{d,m}(q), equal to
/// the DT invariant of Q_m at (1,...,1; d).
inline LaurentHalf poincare_dm(int d, int m) {
  detail::require_nonempty(d, m);
  return subspace_dt(d, m);
}

/// The DT-side value used by the generating-function identities, defined on
/// the boundary as well: P_{d,m} for d < m, 1 for d = 1 and m <= 1 (one
/// point in P^0), and 0 for d >= 2, m <= d.
inline LaurentHalf poincare_dm_extended(int d, int m) {
  if (d < 1 || m < 0) throw std::invalid_argument("poincare_dm_extended needs d >= 1, m >= 0");
  if (d < m) return poincare_dm(d, m);
  if (d == 1) return LaurentHalf(1);
  return LaurentHalf();
}

/// P_{d,m} = P_{m-d,m} for coprime d < m.
inline bool duality_check(int d, int m) {
  if (std::gcd(d, m) != 1) throw std::invalid_argument("duality_check needs coprime d and m");
  detail::require_nonempty(d, m);
  return poincare_dm(d, m) == poincare_dm(m - d, m);
}

/// Shifted Euler characteristic (intersection cohomology when gcd(d,m) > 1).
inline BigInt euler_dm(int d, int m) {
  detail::require_nonempty(d, m);
  return euler_from_shifted(poincare_dm(d, m), moduli_dimension(d, m));
}

enum class ZForm { exp_form, quadratic_form };

/// z_1, ..., z_dmax with z_d = P_{d,2d-1}, from either recursion.
inline std::vector<LaurentHalf> z_sequence(int dmax, ZForm form) {
  if (dmax < 1) throw std::invalid_argument("z_sequence needs dmax >= 1");
  std::vector<LaurentHalf> z{LaurentHalf(1)};  // z[k-1] = z_k
  for (int n = 2; n <= dmax; ++n) {
    LaurentHalf next;
    if (form == ZForm::exp_form) {
      const int d = n - 1;
      std::function<LaurentHalf(long)> part = [&](long a) {
        LaurentHalf pp = quantum_proj(a - 1);
        return pp * pp * z[a - 1] * Rational(BigInt(1), factorial(2 * a));
      };
      next = composition_exp_sum<LaurentHalf>(d, part) * Rational(factorial(2 * d));
    } else {
      for (int k = 1; k < n; ++k) {
        LaurentHalf qk = quantum_proj(k - 1);
        next += z[k - 1] * z[n - k - 1] * qk * qk * Rational(binomial(2 * n - 3, 2 * k - 1));
      }
    }
    z.push_back(std::move(next));
  }
  return z;
}

/// Both statements of the r-th congruence family, with every P_{d,m}
/// computed independently through poincare_dm:
///   sum_d P_{d,rd+1} x^d/(rd)! = exp( sum_d P_{P^(d-1)}^2 P_{d,rd-1} x^d/(rd)! )
///   P_{d,rd} = P_{P^(d-1)} P_{d,rd-1}
/// for d = 1..dmax.
inline bool check_r1(int r, int dmax) {
  if (r < 1 || dmax < 1) throw std::invalid_argument("check_r1 needs r, dmax >= 1");
  RatSeq<LaurentHalf> a, b;
  bool ok = true;
  for (int d = 1; d <= dmax; ++d) {
    const Rational inv(BigInt(1), factorial(static_cast<long>(r) * d));
    const LaurentHalf pp = quantum_proj(d - 1);
    const LaurentHalf below = poincare_dm_extended(d, r * d - 1);
    a.push_back(poincare_dm_extended(d, r * d + 1) * inv);
    b.push_back(pp * pp * below * inv);
    ok = ok && poincare_dm_extended(d, r * d) == pp * below;
  }
  return ok && seq_exp_transfer(b) == a;
}

/// P_{2,m} for 3 <= m <= 2 rmax + 1 from the projective-line recursion
///   P_{2,2r+1} = P_{P^1}^2 P_{2,2r-1} + C(2r,r)/2,   P_{2,2r} = P_{P^1} P_{2,2r-1},
/// seeded with P_{2,3} = 1. Keyed by m.
inline std::map<int, LaurentHalf> two_point_family(int rmax) {
  if (rmax < 1) throw std::invalid_argument("two_point_family needs rmax >= 1");
  std::map<int, LaurentHalf> out;
  const LaurentHalf p1 = quantum_proj(1);
  LaurentHalf odd(1);
  out[3] = odd;
  for (int r = 2; r <= rmax; ++r) {
    out[2 * r] = p1 * odd;
    odd = p1 * p1 * odd + LaurentHalf(frac(binomial(2 * r, r), 2));
    out[2 * r + 1] = odd;
  }
  return out;
}

/// (-p^(1/2))^dim * P(p): the ordinary Poincaré polynomial evaluated at p.
inline Rational unshifted_eval(const LaurentHalf& P, long dim, const Rational& p) {
  return (P * LaurentHalf::neg_sqrt_q_power(dim)).eval_at_q(p);
}

inline Rational eval_at_q(const RationalFn& f, const Rational& x) {
  return f.num().eval_at_q(x) / f.den().eval_at_q(x);
}

// ---------------------------------------------------------------------------
// Finite-field oracle
// ---------------------------------------------------------------------------

namespace detail {

/// Normalized representatives (first nonzero coordinate 1) of P^(d-1)(F_p).
inline std::vector<std::vector<int>> projective_points(int d, int p) {
  std::vector<std::vector<int>> pts;
  for (int lead = 0; lead < d; ++lead) {
    long count = 1;
    for (int i = lead + 1; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      std::vector<int> v(d, 0);
      v[lead] = 1;
      long c = code;
      for (int i = lead + 1; i < d; ++i) {
        v[i] = static_cast<int>(c % p);
        c /= p;
      }
      pts.push_back(std::move(v));
    }
  }
  return pts;
}

inline int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw std::domain_error("no inverse mod p");
}

/// Rank over F_p of the given vectors (Gaussian elimination).
inline int rank_mod_p(std::vector<std::vector<int>> rows, int p) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    const int inv = inverse_mod(rows[rank][c], p);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const int f = (rows[r][c] * inv) % p;
      for (int k = c; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

/// Number of m-tuples of points of P^(d-1)(F_p) with rk(A_I) >= (d/m)|I|
/// for every nonempty proper I.
inline BigInt count_semistable_tuples(int d, int m, int p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const auto pts = projective_points(d, p);
  const long npts = static_cast<long>(pts.size());
  double total_tuples = std::pow(static_cast<double>(npts), m);
  if (total_tuples > 5e7) throw std::invalid_argument("finite-field enumeration too large");

  // Tuples are split by their first point; each chunk is independent.
  auto count_chunk = [&](long first) -> long {
    std::vector<long> idx(m, 0);
    idx[0] = first;
    long count = 0;
    while (true) {
      bool ok = true;
      for (unsigned mask = 1; ok && mask + 1 < (1u << m); ++mask) {
        std::vector<std::vector<int>> rows;
        int size = 0;
        for (int k = 0; k < m; ++k)
          if (mask & (1u << k)) {
            rows.push_back(pts[idx[k]]);
            ++size;
          }
        if (static_cast<long>(rank_mod_p(std::move(rows), p)) * m < static_cast<long>(d) * size) ok = false;
      }
      if (ok) ++count;
      int k = m - 1;
      while (k >= 1 && ++idx[k] == npts) idx[k--] = 0;
      if (k < 1) break;
    }
    return count;
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  BigInt total = 0;
  if (m == 1) {
    for (long f = 0; f < npts; ++f) total += count_chunk(f);
    return total;
  }
  std::vector<std::future<long>> jobs;
  long next = 0;
  while (next < npts || !jobs.empty()) {
    while (next < npts && jobs.size() < workers) jobs.push_back(std::async(std::launch::async, count_chunk, next++));
    total += jobs.front().get();
    jobs.erase(jobs.begin());
  }
  return total;
}

inline BigInt gl_order(int d, int p) {
  BigInt r = 1, pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
  BigInt pi = 1;
  for (int i = 0; i < d; ++i) {
    r *= pd - pi;
    pi *= p;
  }
  return r;
}

}  // namespace detail

/// Semistable m-tuples in P^(d-1)(F_p) divided by |PGL_d(F_p)|. For coprime
/// d, m this is the unshifted Poincaré polynomial of M_{d,m} at p.
inline BigInt ff_count(int d, int m, int p) {
  if (std::gcd(d, m) != 1) throw std::invalid_argument("ff_count needs coprime d and m");
  detail::require_nonempty(d, m);
  BigInt n = detail::count_semistable_tuples(d, m, p);
  BigInt pgl = detail::gl_order(d, p) / (p - 1);
  if (n % pgl != 0) throw std::logic_error("semistable count not divisible by |PGL_d(F_p)|");
  return n / pgl;
}

/// |R_d^sst(F_p)| / |G_d(F_p)| for Q_m at (1,...,1; d): the stacky point
/// count that hn_stack_poly evaluates at q = p. Zero vectors are never
/// semistable and the torus (F_p^*)^m cancels against the scalings of the
/// vectors, leaving (semistable point tuples) / |GL_d(F_p)|.
inline Rational ff_stack_count(int d, int m, int p) {
  detail::require_nonempty(d, m);
  return frac(detail::count_semistable_tuples(d, m, p), detail::gl_order(d, p));
}

}  // namespace ptconf
