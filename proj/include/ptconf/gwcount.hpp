#pragma once

// Rational curve counts in P^2: Kontsevich's recursion, the tangency
// recursions, and a direct floor-diagram enumeration for one point of
// maximal tangency to a line.

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ptconf/exactalg.hpp"

namespace ptconf {

namespace detail {
inline BigInt require_integer(const Rational& x, const char* what) {
  if (x.get_den() != 1) throw std::logic_error(std::string(what) + " produced a non-integer: " + to_string(x));
  return x.get_num();
}
}  // namespace detail

/// N_1, ..., N_dmax: rational plane curves of degree d through 3d-1 points.
inline std::vector<BigInt> kontsevich(int dmax) {
  if (dmax < 1) throw std::invalid_argument("kontsevich needs dmax >= 1");
  std::vector<BigInt> N{0, 1};
  for (int d = 2; d <= dmax; ++d) {
    BigInt s = 0;
    for (int k = 1; k < d; ++k) {
      const int l = d - k;
      s += N[k] * N[l] * k * k * l * (l * binomial(3 * d - 4, 3 * k - 2) - k * binomial(3 * d - 4, 3 * k - 1));
    }
    N.push_back(s);
  }
  return {N.begin() + 1, N.end()};
}

/// N_d((d), empty) for d = 1..dmax: rational curves of degree d through
/// 2d-1 general points, tangent to a line to order d at a fixed point.
inline std::vector<BigInt> tangent_N(int dmax) {
  if (dmax < 1) throw std::invalid_argument("tangent_N needs dmax >= 1");
  std::vector<BigInt> N{1};
  for (int d = 1; d < dmax; ++d) {
    std::function<Rational(long)> f = [&](long a) -> Rational {
      return Rational(a * a * N[a - 1]) * frac(1, factorial(2 * a));
    };
    N.push_back(detail::require_integer(composition_exp_sum<Rational>(d, f) * Rational(factorial(2 * d)), "tangent_N"));
  }
  return N;
}

/// N_d(empty, (d)): the tangency point is allowed to move along the line.
inline BigInt moving_N(int d) {
  if (d < 1) throw std::invalid_argument("moving_N needs d >= 1");
  return d * tangent_N(d).back();
}

/// N_d(empty, (d)) for d = 1..dmax from its own recursion.
inline std::vector<BigInt> cor1_seq(int dmax) {
  if (dmax < 1) throw std::invalid_argument("cor1_seq needs dmax >= 1");
  std::vector<BigInt> N{1};
  for (int d = 1; d < dmax; ++d) {
    std::function<Rational(long)> f = [&](long a) -> Rational { return Rational(a * N[a - 1]) * frac(1, factorial(2 * a)); };
    Rational v = composition_exp_sum<Rational>(d, f) * Rational(factorial(2 * d)) * Rational(d + 1);
    N.push_back(detail::require_integer(v, "cor1_seq"));
  }
  return N;
}

// ---------------------------------------------------------------------------
// Floor diagrams
// ---------------------------------------------------------------------------

struct FloorEdge {
  int tail;
  int head;
  int weight;
  friend auto operator<=>(const FloorEdge&, const FloorEdge&) = default;
};

/// Vertices 1..degree; every edge points upward.
struct FloorDiagram {
  int degree = 1;
  std::vector<FloorEdge> edges;

  int genus() const { return static_cast<int>(edges.size()) - degree + 1; }

  /// out-weight minus in-weight.
  int divergence(int v) const {
    int div = 0;
    for (const auto& e : edges) {
      if (e.tail == v) div += e.weight;
      if (e.head == v) div -= e.weight;
    }
    return div;
  }

  bool is_connected() const {
    std::vector<int> parent(degree + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int comps = degree;
    for (const auto& e : edges) {
      int a = find(e.tail), b = find(e.head);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    return comps == 1;
  }

  bool is_valid() const {
    if (degree < 1) return false;
    for (const auto& e : edges)
      if (e.tail < 1 || e.head > degree || e.tail >= e.head || e.weight < 1) return false;
    for (int v = 1; v <= degree; ++v)
      if (divergence(v) > 1) return false;
    return is_connected();
  }

  /// Genus 0 with divergence 1 at every vertex below the top and 1-d at the top.
  bool compatible_with_full_tangency() const {
    if (!is_valid() || genus() != 0) return false;
    for (int v = 1; v < degree; ++v)
      if (divergence(v) != 1) return false;
    return divergence(degree) == 1 - degree;
  }

  void canonicalize() { std::sort(edges.begin(), edges.end()); }

  std::string to_string() const {
    std::string s = "d=" + std::to_string(degree) + " {";
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(edges[i].tail) + "->" + std::to_string(edges[i].head) + ":" + std::to_string(edges[i].weight);
    }
    return s + "}";
  }

  friend bool operator==(const FloorDiagram&, const FloorDiagram&) = default;
};

/// Genus-0 diagrams of degree d compatible with ((d), empty), each once,
/// with sorted edge lists, in lexicographic order.
inline std::vector<FloorDiagram> enum_floor_diagrams(int d) {
  if (d < 1) throw std::invalid_argument("enum_floor_diagrams needs d >= 1");
  std::vector<FloorDiagram> out;
  FloorDiagram cur;
  cur.degree = d;
  std::vector<int> in_weight(d + 1, 0);

  // Vertex v sends out in_weight[v] + 1 along edges to higher vertices,
  // listed in nondecreasing (head, weight) order.
  std::function<void(int)> place_vertex;
  std::function<void(int, int, int, int)> place_edge = [&](int v, int remaining, int min_head, int min_weight) {
    if (remaining == 0) {
      place_vertex(v + 1);
      return;
    }
    if (static_cast<int>(cur.edges.size()) >= d - 1) return;
    for (int h = min_head; h <= d; ++h)
      for (int w = (h == min_head ? min_weight : 1); w <= remaining; ++w) {
        cur.edges.push_back({v, h, w});
        in_weight[h] += w;
        place_edge(v, remaining - w, h, w);
        in_weight[h] -= w;
        cur.edges.pop_back();
      }
  };
  place_vertex = [&](int v) {
    if (v == d) {
      if (cur.compatible_with_full_tangency()) out.push_back(cur);
      return;
    }
    place_edge(v, in_weight[v] + 1, v + 1, 1);
  };
  place_vertex(1);
  std::sort(out.begin(), out.end(), [](const FloorDiagram& a, const FloorDiagram& b) { return a.edges < b.edges; });
  return out;
}

/// prod w(e)^2 times prod rho_i.
inline BigInt diagram_multiplicity(const FloorDiagram& D, const std::vector<int>& rho = {}) {
  BigInt m = 1;
  for (const auto& e : D.edges) m *= BigInt(e.weight) * e.weight;
  for (int r : rho) m *= r;
  return m;
}

/// Linear extensions of the marked poset: the d original vertices in their
/// given order, one new vertex strictly inside every edge, and a top vertex
/// above everything.
inline BigInt marking_count(const FloorDiagram& D) {
  if (!D.compatible_with_full_tangency()) throw std::invalid_argument("diagram is not compatible with ((d), empty)");
  const int d = D.degree;
  const int n = 2 * d;  // originals 0..d-1, edge vertices d..2d-2, top 2d-1
  if (n > 30) throw std::invalid_argument("diagram too large for marking_count");
  std::vector<unsigned> below(n, 0);  // bitmask of required predecessors
  for (int v = 1; v < d; ++v) below[v] |= 1u << (v - 1);
  for (std::size_t i = 0; i < D.edges.size(); ++i) {
    const int s = d + static_cast<int>(i);
    below[s] |= 1u << (D.edges[i].tail - 1);
    below[D.edges[i].head - 1] |= 1u << s;
  }
  for (int v = 0; v < n - 1; ++v) below[n - 1] |= 1u << v;

  std::vector<BigInt> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (unsigned mask = 0; mask < ways.size(); ++mask) {
    if (ways[mask] == 0) continue;
    for (int v = 0; v < n; ++v)
      if (!(mask & (1u << v)) && (below[v] & ~mask) == 0) ways[mask | (1u << v)] += ways[mask];
  }
  return ways.back();
}

struct FloorTerm {
  FloorDiagram diagram;
  BigInt multiplicity;
  BigInt markings;
};

inline std::vector<FloorTerm> floor_breakdown(int d) {
  std::vector<FloorTerm> out;
  for (auto& D : enum_floor_diagrams(d)) {
    BigInt mu = diagram_multiplicity(D);
    BigInt mk = marking_count(D);
    out.push_back({std::move(D), mu, mk});
  }
  return out;
}

/// sum over compatible diagrams of multiplicity times markings.
inline BigInt floor_total(int d) {
  BigInt total = 0;
  for (const auto& t : floor_breakdown(d)) total += t.multiplicity * t.markings;
  return total;
}

}  // namespace ptconf
