#pragma once

// Named suites of cross-route consistency checks. Every check compares two
// independently computed quantities; none relies on stored reference data.

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptconf/dtcore.hpp"
#include "ptconf/gwcount.hpp"
#include "ptconf/io.hpp"
#include "ptconf/plethys.hpp"
#include "ptconf/pointconf.hpp"
#include "ptconf/treecount.hpp"

namespace ptconf {

struct VerifyCheck {
  std::string description;
  bool pass = false;
  std::string witness;
};

struct VerifySuite {
  std::string name;
  std::vector<VerifyCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string description, bool pass, std::string witness = {}) {
    checks.push_back({std::move(description), pass, std::move(witness)});
  }
};

namespace detail {

inline std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + x.get_str();
  return s;
}

inline VerifySuite suite_algebra() {
  VerifySuite s{"algebra", {}};
  {
    RatSeq<Rational> b;
    for (long n = 1; n <= 8; ++n) b.push_back(frac(n * n - 3, n + 1));
    s.add("log transfer inverts exp transfer", seq_log_transfer(seq_exp_transfer(b)) == b);
  }
  {
    const DimVector cap{2, 3};
    GradedSeries f(cap);
    f.add_term(DimVector{1, 0}, RationalFn(quantum_proj(1)));
    f.add_term(DimVector{0, 1}, RationalFn(LaurentHalf::q_half_power(1)));
    f.add_term(DimVector{1, 2}, RationalFn(LaurentHalf(1), LaurentHalf(1) - LaurentHalf::q_half_power(2)));
    s.add("Log(Exp(f)) = f on a two-variable series", pleth_log(pleth_exp(f)) == f);
  }
  {
    const DtResult dt = dt_invariants(Quiver::one_vertex(), Stability({0}), DimVector{4});
    bool ok = true;
    std::string w;
    for (int n = 1; n <= 4; ++n) {
      const LaurentHalf& v = dt.at(DimVector{n});
      ok = ok && v == LaurentHalf(n == 1 ? 1 : 0);
      w += (w.empty() ? "" : ",") + v.to_string();
    }
    s.add("one-vertex quiver DT is 1 in degree one and 0 above", ok, w);
  }
  return s;
}

inline VerifySuite suite_ztable() {
  VerifySuite s{"ztable", {}};
  const auto a = z_sequence(7, ZForm::exp_form), b = z_sequence(7, ZForm::quadratic_form);
  for (int d = 1; d <= 7; ++d) {
    s.add("z_" + std::to_string(d) + ": exponential and quadratic recursions agree", a[d - 1] == b[d - 1],
          io::coefficient_row(a[d - 1]));
    s.add("z_" + std::to_string(d) + " is palindromic", a[d - 1].is_palindromic());
  }
  return s;
}

inline VerifySuite suite_dt() {
  VerifySuite s{"dt", {}};
  const auto z = z_sequence(4, ZForm::exp_form);
  for (int d = 1; d <= 4; ++d) {
    LaurentHalf p = poincare_dm_extended(d, 2 * d - 1);
    s.add("P_{" + std::to_string(d) + "," + std::to_string(2 * d - 1) + "} from DT equals z_" + std::to_string(d), p == z[d - 1],
          io::coefficient_row(p));
  }
  for (int m = 2; m <= 5; ++m)
    for (int d = 1; d < m; ++d) {
      const auto st = subspace_setup(ConfigSpec::make(d, m));
      const LaurentHalf generic = dt_invariants(st.quiver, st.stability, st.dim).at(st.dim);
      s.add("generic and symmetrized DT agree for (" + std::to_string(d) + "," + std::to_string(m) + ")",
            generic == poincare_dm(d, m), generic.to_string());
    }
  {
    const Quiver Q = Quiver::subspace(4);
    const Stability st({1, 1, 1, 1, -2});
    const DimVector d{1, 1, 1, 1, 2};
    s.add("HN prefix recursion matches ordered decompositions on Q_4", hn_stack_poly(Q, st, d) == hn_stack_poly_naive(Q, st, d));
  }
  return s;
}

inline VerifySuite suite_duality() {
  VerifySuite s{"duality", {}};
  for (int m = 2; m <= 7; ++m)
    for (int d = 1; d < m; ++d)
      if (std::gcd(d, m) == 1)
        s.add("P_{" + std::to_string(d) + "," + std::to_string(m) + "} = P_{" + std::to_string(m - d) + "," + std::to_string(m) + "}",
              duality_check(d, m));
  return s;
}

inline VerifySuite suite_palindromic() {
  VerifySuite s{"palindromic", {}};
  for (int m = 2; m <= 7; ++m)
    for (int d = 1; d < m; ++d) {
      const LaurentHalf p = poincare_dm(d, m);
      const long dim = moduli_dimension(d, m);
      const bool ok = p.is_palindromic() && !p.is_zero() && p.max_exp() == dim;
      s.add("P_{" + std::to_string(d) + "," + std::to_string(m) + "} palindromic of half-degree " + std::to_string(dim), ok,
            p.to_string());
    }
  return s;
}

inline VerifySuite suite_oracle() {
  VerifySuite s{"oracle", {}};
  const int cases[][3] = {{2, 5, 2}, {2, 5, 3}, {3, 5, 2}, {2, 7, 2}, {3, 4, 2}, {3, 4, 3}};
  for (const auto& c : cases) {
    const int d = c[0], m = c[1], p = c[2];
    const BigInt n = ff_count(d, m, p);
    const Rational e = unshifted_eval(poincare_dm(d, m), moduli_dimension(d, m), p);
    s.add("point count of M_{" + std::to_string(d) + "," + std::to_string(m) + "} over F_" + std::to_string(p) +
              " equals the Poincare polynomial at p",
          Rational(n) == e, n.get_str());
  }
  {
    const auto st = subspace_setup(ConfigSpec::make(2, 4));
    const Rational ff = ff_stack_count(2, 4, 3);
    s.add("stacky point count of Q_4 at (1,1,1,1;2) over F_3 equals the HN count",
          ff == eval_at_q(hn_stack_poly(st.quiver, st.stability, st.dim), 3), to_string(ff));
  }
  return s;
}

inline VerifySuite suite_r1() {
  VerifySuite s{"r1", {}};
  const int cases[][2] = {{1, 4}, {2, 3}, {3, 2}};
  for (const auto& c : cases)
    s.add("exponential and product identities for r=" + std::to_string(c[0]) + ", d<=" + std::to_string(c[1]), check_r1(c[0], c[1]));
  return s;
}

inline VerifySuite suite_framed() {
  VerifySuite s{"framed", {}};
  for (int m = 2; m <= 5; ++m)
    for (int d = 1; d < m; ++d) {
      const auto st = subspace_setup(ConfigSpec::make(d, m));
      std::vector<int> fr(m + 1, 0);
      fr[m] = 1;
      const DimVector F(fr);
      const LaurentHalf series = framed_poincare(framed_gen_series(st.quiver, st.stability, F, st.dim), F, st.dim);
      const LaurentHalf closed = framed_closed(d, m);
      s.add("framed (" + std::to_string(d) + "," + std::to_string(m) + "): closed recursion equals Exp coefficient",
            series == closed, closed.to_string());
    }
  return s;
}

inline VerifySuite suite_gw() {
  VerifySuite s{"gw", {}};
  const auto t = tangent_N(7);
  const auto z = z_sequence(7, ZForm::exp_form);
  for (int d = 1; d <= 7; ++d)
    s.add("N_" + std::to_string(d) + "((d),0) = z_" + std::to_string(d) + "(1)", Rational(t[d - 1]) == z[d - 1].eval_at_one(),
          t[d - 1].get_str());
  {
    // N_d((d),0) = sum_{k+l=d} N_k N_l k^2 C(2d-3, 2k-1)
    bool ok = true;
    for (int d = 2; d <= 7; ++d) {
      BigInt r = 0;
      for (int k = 1; k < d; ++k) r += t[k - 1] * t[d - k - 1] * k * k * binomial(2 * d - 3, 2 * k - 1);
      ok = ok && r == t[d - 1];
    }
    s.add("tangency counts satisfy the quadratic recursion", ok, join(t));
  }
  const auto c = cor1_seq(4);
  for (int d = 1; d <= 4; ++d) {
    const Rational at1 = poincare_dm_extended(d, 2 * d).eval_at_one() * Rational(((d - 1) * (d - 1)) % 2 ? -1 : 1);
    const BigInt mv = moving_N(d);
    s.add("N_" + std::to_string(d) + "(0,(d)): moving, recursion and P_{d,2d}(1) agree", mv == c[d - 1] && Rational(mv) == at1,
          mv.get_str());
  }
  return s;
}

inline VerifySuite suite_floor() {
  VerifySuite s{"floor", {}};
  const auto t = tangent_N(5);
  for (int d = 1; d <= 5; ++d) {
    const BigInt f = floor_total(d);
    s.add("floor diagrams of degree " + std::to_string(d) + " sum to N_d((d),0)", f == t[d - 1], f.get_str());
  }
  return s;
}

inline VerifySuite suite_trees() {
  VerifySuite s{"trees", {}};
  for (int d = 1; d <= 3; ++d)
    for (const auto& P : partitions(d)) {
      const LevelQuiver Q = build_level_quiver(P, 2 * d + 1);
      bool ok = true;
      long trees = 0;
      for_each_spanning_tree(Q, [&](const SpanTree& T) {
        ++trees;
        ok = ok && is_stable_tree(T, Q) == neighbor_test(T, Q);
      });
      s.add("stability equals the neighbor test on all " + std::to_string(trees) + " spanning trees of Q(" + P.to_string() + ")", ok);
      s.add("degree counting matches enumeration for Q(" + P.to_string() + ")",
            n_stable_degree_formula(P, 2 * d + 1) == n_stable_bruteforce(P, 2 * d + 1, TreeTest::stability));
    }
  const auto z = z_sequence(5, ZForm::exp_form);
  for (int d = 1; d <= 4; ++d) {
    const BigInt a = chi_mps(d), b = chi_closed(d);
    const Rational y = y_series_coeff(d) * Rational(factorial(2 * d));
    s.add("Euler characteristic of M_{" + std::to_string(d) + "," + std::to_string(2 * d + 1) + "} by four routes",
          a == b && Rational(a) == y && Rational(a) == z[d].eval_at_one() && a == euler_dm(d, 2 * d + 1), a.get_str());
  }
  return s;
}

inline VerifySuite suite_twopoint() {
  VerifySuite s{"twopoint", {}};
  for (const auto& [m, p] : two_point_family(3))
    s.add("P_{2," + std::to_string(m) + "} from the two-point recursion", p == poincare_dm(2, m), p.to_string());
  return s;
}

using SuiteFn = VerifySuite (*)();

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"algebra", suite_algebra}, {"ztable", suite_ztable},   {"dt", suite_dt},     {"duality", suite_duality},
      {"palindromic", suite_palindromic}, {"oracle", suite_oracle}, {"r1", suite_r1}, {"framed", suite_framed},
      {"gw", suite_gw},           {"floor", suite_floor},     {"trees", suite_trees}, {"twopoint", suite_twopoint},
  };
  return table;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [n, f] : detail::suite_table()) names.push_back(n);
  return names;
}

/// Runs one named suite; throws std::invalid_argument for unknown names.
inline VerifySuite run_suite(const std::string& name) {
  for (const auto& [n, f] : detail::suite_table())
    if (n == name) return f();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

/// "all" runs every suite in order.
inline std::vector<VerifySuite> run_suites(const std::string& name) {
  if (name != "all") return {run_suite(name)};
  std::vector<VerifySuite> out;
  for (const auto& [n, f] : detail::suite_table()) out.push_back(f());
  return out;
}

inline io::json to_json(const VerifySuite& s) {
  io::json checks = io::json::array();
  for (const auto& c : s.checks) {
    io::json j;
    j["description"] = c.description;
    j["pass"] = c.pass;
    j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  io::json out;
  out["suite"] = s.name;
  out["pass"] = s.passed();
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace ptconf
