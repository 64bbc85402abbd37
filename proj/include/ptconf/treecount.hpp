#pragma once

// Stable spanning trees of complete bipartite level quivers and the two
// formulas for the Euler characteristic of M_{d,2d+1} built on them.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptconf/exactalg.hpp"

namespace ptconf {

/// k_l sinks of level l for each l; d = sum l k_l.
struct WPartition {
  std::map<int, int> mult;

  WPartition() = default;
  explicit WPartition(std::map<int, int> m) : mult(std::move(m)) {
    for (auto it = mult.begin(); it != mult.end();) {
      if (it->first < 1 || it->second < 0) throw std::invalid_argument("partition levels must be >= 1 and counts >= 0");
      it = it->second == 0 ? mult.erase(it) : std::next(it);
    }
    if (mult.empty()) throw std::invalid_argument("empty partition");
  }

  /// "l:k,l:k,..." with repeated levels added up.
  static WPartition parse(const std::string& text) {
    std::map<int, int> m;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("partition entry '" + item + "' is not l:k");
      std::size_t used1 = 0, used2 = 0;
      const std::string ls = item.substr(0, colon), ks = item.substr(colon + 1);
      int l = 0, k = 0;
      try {
        l = std::stoi(ls, &used1);
        k = std::stoi(ks, &used2);
      } catch (const std::exception&) {
        throw std::invalid_argument("partition entry '" + item + "' is not l:k");
      }
      if (used1 != ls.size() || used2 != ks.size()) throw std::invalid_argument("partition entry '" + item + "' is not l:k");
      m[l] += k;
    }
    return WPartition(std::move(m));
  }

  int total() const {
    int d = 0;
    for (auto [l, k] : mult) d += l * k;
    return d;
  }
  int parts() const {
    int s = 0;
    for (auto [l, k] : mult) s += k;
    return s;
  }
  std::string to_string() const {
    std::string s;
    for (auto [l, k] : mult) s += (s.empty() ? "" : ",") + std::to_string(l) + ":" + std::to_string(k);
    return s;
  }
  friend bool operator==(const WPartition&, const WPartition&) = default;
};

/// All partitions of d, largest parts first.
inline std::vector<WPartition> partitions(int d) {
  if (d < 1) throw std::invalid_argument("partitions needs d >= 1");
  std::vector<WPartition> out;
  std::map<int, int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int l = std::min(rest, maxpart); l >= 1; --l) {
      ++cur[l];
      rec(rest - l, l);
      if (--cur[l] == 0) cur.erase(l);
    }
  };
  rec(d, d);
  return out;
}

/// Complete bipartite quiver: m sources, one sink per entry of sink_levels,
/// one arrow from every source to every sink. Vertices are numbered with
/// sources 0..m-1 first, then sinks.
struct LevelQuiver {
  int sources = 0;
  std::vector<int> sink_levels;

  int sinks() const { return static_cast<int>(sink_levels.size()); }
  int vertices() const { return sources + sinks(); }
};

inline LevelQuiver build_level_quiver(const WPartition& P, int m) {
  if (m < 1) throw std::invalid_argument("need at least one source");
  LevelQuiver Q;
  Q.sources = m;
  for (auto [l, k] : P.mult)
    for (int i = 0; i < k; ++i) Q.sink_levels.push_back(l);
  return Q;
}

/// Edges are (source, sink index) pairs, kept sorted.
struct SpanTree {
  std::vector<std::pair<int, int>> edges;

  int sink_degree(int j) const {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.second == j; }));
  }
  friend bool operator==(const SpanTree&, const SpanTree&) = default;
};

inline bool is_spanning_tree(const SpanTree& T, const LevelQuiver& Q) {
  const int n = Q.vertices();
  if (static_cast<int>(T.edges.size()) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [s, j] : T.edges) {
    if (s < 0 || s >= Q.sources || j < 0 || j >= Q.sinks()) return false;
    int a = find(s), b = find(Q.sources + j);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

/// Calls f on every spanning tree of Q, in lexicographic edge order.
inline void for_each_spanning_tree(const LevelQuiver& Q, const std::function<void(const SpanTree&)>& f) {
  const int m = Q.sources, s = Q.sinks(), n = m + s;
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < s; ++j) all.emplace_back(a, j);
  const int total = static_cast<int>(all.size());
  SpanTree cur;
  std::function<int(std::vector<int>&, int)> find = [&](std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x];
    return x;
  };
  std::function<void(int, std::vector<int>&)> rec = [&](int i, std::vector<int>& parent) {
    const int need = n - 1 - static_cast<int>(cur.edges.size());
    if (need == 0) {
      f(cur);
      return;
    }
    if (total - i < need) return;
    auto [a, j] = all[i];
    const int ra = find(parent, a), rb = find(parent, m + j);
    if (ra != rb) {
      std::vector<int> next = parent;
      next[ra] = rb;
      cur.edges.push_back(all[i]);
      rec(i + 1, next);
      cur.edges.pop_back();
    }
    rec(i + 1, parent);
  };
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  rec(0, parent);
}

/// Stability of the thin tree representation for theta = 1 on sources and 0
/// on sinks, with sinks weighted by their level in the slope denominator.
/// Subrepresentations are the vertex sets U with every tree-neighbor of a
/// source in U also in U; each nonempty proper one must have strictly
/// smaller slope #sources/(#sources + sum of sink levels).
inline bool is_stable_tree(const SpanTree& T, const LevelQuiver& Q) {
  if (!is_spanning_tree(T, Q)) throw std::invalid_argument("not a spanning tree of the quiver");
  const int m = Q.sources, n = Q.vertices();
  if (n > 30) throw std::invalid_argument("quiver too large for exhaustive stability test");
  std::vector<unsigned> succ(m, 0);
  for (auto [a, j] : T.edges) succ[a] |= 1u << (m + j);
  long total_levels = 0;
  for (int l : Q.sink_levels) total_levels += l;
  const long tot_num = m, tot_den = m + total_levels;
  const unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (unsigned U = 1; U < full; ++U) {
    bool closed = true;
    long src = 0, lev = 0;
    for (int a = 0; a < m && closed; ++a)
      if (U & (1u << a)) {
        ++src;
        if ((succ[a] & ~U) != 0) closed = false;
      }
    if (!closed) continue;
    for (int j = 0; j < Q.sinks(); ++j)
      if (U & (1u << (m + j))) lev += Q.sink_levels[j];
    // src/(src+lev) < m/(m+L)
    if (src * tot_den >= tot_num * (src + lev)) return false;
  }
  return true;
}

/// Every sink of level l has exactly 2l+1 tree neighbors.
inline bool neighbor_test(const SpanTree& T, const LevelQuiver& Q) {
  if (!is_spanning_tree(T, Q)) throw std::invalid_argument("not a spanning tree of the quiver");
  for (int j = 0; j < Q.sinks(); ++j)
    if (T.sink_degree(j) != 2 * Q.sink_levels[j] + 1) return false;
  return true;
}

enum class TreeTest { neighbors, stability };

/// Counts spanning trees of Q(P) with m sources passing the chosen test.
inline BigInt n_stable_bruteforce(const WPartition& P, int m, TreeTest test = TreeTest::neighbors) {
  const LevelQuiver Q = build_level_quiver(P, m);
  BigInt count = 0;
  for_each_spanning_tree(Q, [&](const SpanTree& T) {
    if (test == TreeTest::neighbors ? neighbor_test(T, Q) : is_stable_tree(T, Q)) ++count;
  });
  return count;
}

/// Spanning trees of K_{m,s} whose sinks have degrees b_j = 2 l_j + 1:
/// m^(s-1) (m-1)! / prod (b_j - 1)!, or 0 unless sum (b_j - 1) = m - 1.
inline BigInt n_stable_degree_formula(const WPartition& P, int m) {
  const LevelQuiver Q = build_level_quiver(P, m);
  long excess = 0;
  for (int l : Q.sink_levels) excess += 2 * l;
  if (excess != m - 1) return 0;
  BigInt r = factorial(m - 1), mp;
  mpz_ui_pow_ui(mp.get_mpz_t(), m, Q.sinks() - 1);
  r *= mp;
  for (int l : Q.sink_levels) r /= factorial(2 * l);
  return r;
}

/// Number of stable spanning trees; exhaustive for small quivers, degree
/// counting otherwise.
inline BigInt n_stable(const WPartition& P, int m) {
  if (m < 1) throw std::invalid_argument("need at least one source");
  if (static_cast<long>(m) * P.parts() <= 21) return n_stable_bruteforce(P, m);
  return n_stable_degree_formula(P, m);
}

/// chi(M_{d,2d+1}) = sum_P n(P) prod_l (-1)^(k_l(l-1)) l^(k_l(2l-1)) / k_l!.
inline BigInt chi_mps(int d) {
  if (d < 1) throw std::invalid_argument("chi_mps needs d >= 1");
  Rational sum = 0;
  for (const auto& P : partitions(d)) {
    Rational term(n_stable(P, 2 * d + 1));
    for (auto [l, k] : P.mult) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), l, static_cast<unsigned long>(k) * (2 * l - 1));
      if ((static_cast<long>(k) * (l - 1)) % 2) p = -p;
      term *= frac(p, factorial(k));
    }
    sum += term;
  }
  if (sum.get_den() != 1) throw std::logic_error("chi_mps produced a non-integer: " + to_string(sum));
  return sum.get_num();
}

/// (2d)!/(2d+1) sum_k (-1)^(d-k) (2d+1)^k / k! sum_{a_1+..+a_k=d} prod a_i^(2a_i-1)/(2a_i)!.
inline BigInt chi_closed(int d) {
  if (d < 1) throw std::invalid_argument("chi_closed needs d >= 1");
  std::function<Rational(long)> f = [&](long a) -> Rational {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), a, 2 * a - 1);
    return frac(-(2 * d + 1) * p, factorial(2 * a));
  };
  Rational v = composition_exp_sum<Rational>(d, f) * frac(factorial(2 * d), 2 * d + 1);
  if (d % 2) v = -v;
  if (v.get_den() != 1) throw std::logic_error("chi_closed produced a non-integer: " + to_string(v));
  return v.get_num();
}

/// [x^(2d+1)] y for y = x Phi(y), Phi(u) = exp(sum_l (-1)^(l-1) l^(2l-1) u^(2l)/(2l)!),
/// by fixed-point iteration on series truncated after x^(2d+1).
inline Rational y_series_coeff(int d) {
  if (d < 1) throw std::invalid_argument("y_series_coeff needs d >= 1");
  const int N = 2 * d + 1;
  using Series = std::vector<Rational>;  // index = degree
  auto mul = [N](const Series& a, const Series& b) {
    Series r(N + 1, 0);
    for (int i = 0; i <= N; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= N; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  };
  std::vector<Rational> g_coeff(N + 1, 0);  // g(u) = sum g_coeff[n] u^n
  for (int l = 1; 2 * l <= N; ++l) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), l, 2 * l - 1);
    g_coeff[2 * l] = frac((l % 2) ? p : BigInt(-p), factorial(2 * l));
  }
  Series y(N + 1, 0);
  for (int iter = 0; iter < N; ++iter) {
    Series g(N + 1, 0), power = y;
    for (int n = 1; n <= N; ++n) {
      for (int i = 0; i <= N; ++i) g[i] += g_coeff[n] * power[i];
      power = mul(power, y);
    }
    RatSeq<Rational> b(g.begin() + 1, g.end());
    RatSeq<Rational> phi = seq_exp_transfer(b);  // Phi(y) - 1, degrees 1..N
    Series next(N + 1, 0);
    next[1] = 1;
    for (int i = 1; i + 1 <= N; ++i) next[i + 1] = phi[i - 1];
    y = std::move(next);
  }
  return y[N];
}

}  // namespace ptconf
