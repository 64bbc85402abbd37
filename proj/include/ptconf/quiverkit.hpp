#pragma once

// Quivers, dimension vectors, slope stabilities, the Euler form and the
// resolved Harder-Narasimhan stack count P_d^Theta(q).

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptconf/dimvector.hpp"
#include "ptconf/exactalg.hpp"

namespace ptconf {

struct Arrow {
  int tail;
  int head;
};

class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows) : n_(vertex_count), arrows_(std::move(arrows)) {
    if (n_ < 1) throw std::invalid_argument("quiver needs at least one vertex");
    for (const auto& a : arrows_)
      if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
        throw std::invalid_argument("arrow endpoint out of range");
  }

  static Quiver one_vertex() { return Quiver(1, {}); }

  /// m sources i_1..i_m (vertices 0..m-1) and one sink j (vertex m), one
  /// arrow i_k -> j each.
  static Quiver subspace(int m) {
    std::vector<Arrow> arrows;
    for (int k = 0; k < m; ++k) arrows.push_back({k, m});
    return Quiver(m + 1, std::move(arrows));
  }

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool is_acyclic() const {
    std::vector<int> indeg(n_, 0);
    for (const auto& a : arrows_) ++indeg[a.head];
    std::vector<int> ready;
    for (int v = 0; v < n_; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
      int v = ready.back();
      ready.pop_back();
      ++seen;
      for (const auto& a : arrows_)
        if (a.tail == v && --indeg[a.head] == 0) ready.push_back(a.head);
    }
    return seen == n_;
  }

 private:
  int n_;
  std::vector<Arrow> arrows_;
};

/// <d,e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j.
inline long euler_form(const Quiver& Q, const DimVector& d, const DimVector& e) {
  if (d.size() != static_cast<std::size_t>(Q.vertex_count()) || e.size() != d.size())
    throw std::invalid_argument("dimension vector does not match quiver");
  long r = 0;
  for (std::size_t i = 0; i < d.size(); ++i) r += static_cast<long>(d[i]) * e[i];
  for (const auto& a : Q.arrows()) r -= static_cast<long>(d[a.tail]) * e[a.head];
  return r;
}

/// Slope data mu(d) = theta(d) / kappa(d) with kappa positive on every
/// vertex (so on every nonzero dimension vector).
class Stability {
 public:
  explicit Stability(std::vector<long> theta) : theta_(std::move(theta)), kappa_(theta_.size(), 1) {}
  Stability(std::vector<long> theta, std::vector<long> kappa) : theta_(std::move(theta)), kappa_(std::move(kappa)) {
    if (kappa_.size() != theta_.size()) throw std::invalid_argument("theta and kappa sizes differ");
    for (long k : kappa_)
      if (k <= 0) throw std::invalid_argument("kappa must be positive");
  }

  const std::vector<long>& theta() const { return theta_; }
  const std::vector<long>& kappa() const { return kappa_; }

  long theta_of(const DimVector& d) const { return pair(theta_, d); }
  long kappa_of(const DimVector& d) const { return pair(kappa_, d); }

  Rational slope(const DimVector& d) const {
    long k = kappa_of(d);
    if (k == 0) throw std::domain_error("slope of the zero dimension vector");
    Rational r(theta_of(d), k);
    r.canonicalize();
    return r;
  }

  /// Sign of slope(d) - slope(e), by cross multiplication.
  int compare_slopes(const DimVector& d, const DimVector& e) const {
    long lhs = theta_of(d) * kappa_of(e), rhs = theta_of(e) * kappa_of(d);
    return (lhs > rhs) - (lhs < rhs);
  }

 private:
  long pair(const std::vector<long>& w, const DimVector& d) const {
    if (d.size() != w.size()) throw std::invalid_argument("dimension vector does not match stability");
    long r = 0;
    for (std::size_t i = 0; i < w.size(); ++i) r += w[i] * d[i];
    return r;
  }

  std::vector<long> theta_;
  std::vector<long> kappa_;
};

inline Rational slope(const Stability& s, const DimVector& d) { return s.slope(d); }

/// True iff <d,e> = <e,d> for all d, e in vs.
inline bool check_symmetric(const Quiver& Q, const std::vector<DimVector>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (euler_form(Q, vs[i], vs[j]) != euler_form(Q, vs[j], vs[i])) return false;
  return true;
}

/// All 0 < e <= cap with slope(e) == mu.
inline std::vector<DimVector> lambda_plus(const Quiver& Q, const Stability& s, const Rational& mu, const DimVector& cap) {
  if (cap.size() != static_cast<std::size_t>(Q.vertex_count())) throw std::invalid_argument("cap does not match quiver");
  std::vector<DimVector> out;
  for_each_sub_dimvector(cap, [&](const DimVector& e) {
    if (s.slope(e) == mu) out.push_back(e);
  });
  return out;
}

/// Gaussian binomial [n choose k] in the variable q^(-1).
inline LaurentHalf q_binomial_inverse(long n, long k) {
  if (k < 0 || k > n) return LaurentHalf();
  // rows of Pascal's triangle: [n,k] = [n-1,k-1] + u^k [n-1,k], u = q^(-1)
  std::vector<LaurentHalf> row{LaurentHalf(1)};
  for (long i = 1; i <= n; ++i) {
    std::vector<LaurentHalf> next(static_cast<std::size_t>(i) + 1);
    for (long j = 0; j <= i; ++j) {
      LaurentHalf v;
      if (j >= 1) v += row[j - 1];
      if (j <= i - 1) v += row[j].shifted(-2 * j);
      next[j] = std::move(v);
    }
    row = std::move(next);
  }
  return row[k];
}

/// prod_{j=1..n} (1 - q^(-j)).
inline LaurentHalf q_pochhammer_inverse(long n) {
  LaurentHalf r(1);
  for (long j = 1; j <= n; ++j) r *= LaurentHalf(1) - LaurentHalf::q_half_power(-2 * j);
  return r;
}

/// prod over vertices of prod_{j=1..d_i} (1 - q^(-j)).
inline LaurentHalf automorphism_factor(const DimVector& d) {
  LaurentHalf r(1);
  for (int x : d.entries()) r *= q_pochhammer_inverse(x);
  return r;
}

/// Resolved HN stack count
///   P_d(q) = sum_{d = d^1+...+d^s} (-1)^(s-1) q^(-sum_{k<=l} <d^l,d^k>)
///            prod_k prod_i prod_{j=1..d^k_i} (1-q^(-j))^(-1)
/// over ordered decompositions with mu(d^1+...+d^k) > mu(d) for k < s.
///
/// Evaluated as a memoized recursion over prefixes p of the decomposition.
/// With sigma_k the k-th suffix sum the exponent is sum_k <sigma_k, d^k>,
/// and h(p) = H(p) * automorphism_factor(d - p) is a Laurent polynomial:
///   h(d) = 1,
///   h(p) = - sum_e q^(-<d-p,e>) prod_i [d_i-p_i choose e_i]_{q^-1} h(p+e),
/// e ranging over 0 < e <= d-p with p+e = d or mu(p+e) > mu(d).
/// Then P_d = -h(0) / automorphism_factor(d).
inline RationalFn hn_stack_poly(const Quiver& Q, const Stability& s, const DimVector& d) {
  if (d.size() != static_cast<std::size_t>(Q.vertex_count())) throw std::invalid_argument("d does not match quiver");
  if (d.is_zero()) throw std::domain_error("hn_stack_poly of the zero vector");
  std::map<DimVector, LaurentHalf> memo;
  // binomials per vertex, cached by (n,k)
  std::map<std::pair<long, long>, LaurentHalf> qbin;
  auto binom = [&](long n, long k) -> const LaurentHalf& {
    auto key = std::make_pair(n, k);
    auto it = qbin.find(key);
    if (it == qbin.end()) it = qbin.emplace(key, q_binomial_inverse(n, k)).first;
    return it->second;
  };

  std::function<const LaurentHalf&(const DimVector&)> h = [&](const DimVector& p) -> const LaurentHalf& {
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    LaurentHalf acc;
    if (p == d) {
      acc = LaurentHalf(1);
    } else {
      const DimVector rest = d - p;
      for_each_sub_dimvector(rest, [&](const DimVector& e) {
        DimVector next = p + e;
        if (next != d && s.compare_slopes(next, d) <= 0) return;
        LaurentHalf term = h(next);
        if (term.is_zero()) return;
        for (std::size_t i = 0; i < e.size(); ++i)
          if (e[i] != 0 && e[i] != rest[i]) term *= binom(rest[i], e[i]);
        acc -= term.shifted(-2 * euler_form(Q, rest, e));
      });
    }
    return memo.emplace(p, std::move(acc)).first->second;
  };

  LaurentHalf h0 = h(DimVector(d.size(), 0));
  return RationalFn(-h0, automorphism_factor(d));
}

/// Same quantity summed literally over every admissible ordered
/// decomposition, with rational-function arithmetic throughout. Exponential
/// cost; used to cross-check hn_stack_poly on small inputs.
inline RationalFn hn_stack_poly_naive(const Quiver& Q, const Stability& s, const DimVector& d) {
  if (d.is_zero()) throw std::domain_error("hn_stack_poly of the zero vector");
  RationalFn total;
  std::vector<DimVector> parts;
  std::function<void(const DimVector&)> extend = [&](const DimVector& prefix) {
    const DimVector rest = d - prefix;
    for_each_sub_dimvector(rest, [&](const DimVector& e) {
      DimVector next = prefix + e;
      parts.push_back(e);
      if (next == d) {
        long expo = 0;
        for (std::size_t k = 0; k < parts.size(); ++k)
          for (std::size_t l = k; l < parts.size(); ++l) expo += euler_form(Q, parts[l], parts[k]);
        RationalFn term(LaurentHalf::q_half_power(-2 * expo));
        for (const auto& part : parts) term = term / RationalFn(automorphism_factor(part));
        if (parts.size() % 2 == 0) term = -term;
        total += term;
      } else if (s.compare_slopes(next, d) > 0) {
        extend(next);
      }
      parts.pop_back();
    });
  };
  extend(DimVector(d.size(), 0));
  return total;
}

/// (q^(-1/2) - q^(1/2)) (-q^(1/2))^<d,d> P: turns the stack count of a
/// coprime dimension vector into the shifted Poincaré polynomial of the
/// moduli space.
inline RationalFn normalized_poincare(const Quiver& Q, const DimVector& d, const RationalFn& P) {
  LaurentHalf pre = (LaurentHalf::q_half_power(-1) - LaurentHalf::q_half_power(1)) *
                    LaurentHalf::neg_sqrt_q_power(euler_form(Q, d, d));
  return RationalFn(pre) * P;
}

/// hn_stack_poly specialised to the subspace quiver Q_M with the dimension
/// vector (1,...,1; D) and stability theta = (ts,...,ts; tj), theta(d) = 0.
/// Source-permutation symmetry collapses the prefix states to pairs
/// (sources used, sink dimension used), each transition weighted by the
/// number C(remaining sources, chosen) of subsets it stands for.
inline RationalFn subspace_hn_stack_poly(int M, int D, long theta_source, long theta_sink) {
  if (M < 0 || D < 0 || M + D == 0) throw std::invalid_argument("bad subspace dimension vector");
  if (theta_source * M + theta_sink * D != 0) throw std::invalid_argument("theta(d) must vanish");
  // h[s][t], filled from the top prefix down
  std::vector<std::vector<LaurentHalf>> h(M + 1, std::vector<LaurentHalf>(D + 1));
  h[M][D] = LaurentHalf(1);
  for (int s = M; s >= 0; --s)
    for (int t = D; t >= 0; --t) {
      if (s == M && t == D) continue;
      const int rs = M - s, rt = D - t;
      LaurentHalf acc;
      for (int b = 0; b <= rs; ++b)
        for (int c = 0; c <= rt; ++c) {
          if (b == 0 && c == 0) continue;
          const int ns = s + b, nt = t + c;
          const bool last = (ns == M && nt == D);
          // kappa is the total dimension, theta(d) = 0: slope > 0 iff theta > 0
          if (!last && theta_source * ns + theta_sink * nt <= 0) continue;
          if (h[ns][nt].is_zero()) continue;
          const long form = b + static_cast<long>(rt) * c - static_cast<long>(rs) * c;
          LaurentHalf term = h[ns][nt] * q_binomial_inverse(rt, c);
          term *= Rational(binomial(rs, b));
          acc -= term.shifted(-2 * form);
        }
      h[s][t] = std::move(acc);
    }
  LaurentHalf aut = q_pochhammer_inverse(D) * q_pochhammer_inverse(1).pow(static_cast<unsigned long>(M));
  return RationalFn(-h[0][0], aut);
}

}  // namespace ptconf
