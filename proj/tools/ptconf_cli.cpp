// ptconf: command-line front end for the point-configuration library.
//
// Exit status: 0 success, 1 failed check or internal error, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ptconf/gwcount.hpp"
#include "ptconf/io.hpp"
#include "ptconf/pointconf.hpp"
#include "ptconf/treecount.hpp"
#include "ptconf/verify.hpp"

namespace {

using ptconf::io::json;

struct Options {
  bool json = false;
  double max_seconds = 0;
};

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

std::string lines(const std::vector<ptconf::BigInt>& xs) {
  std::string s;
  for (const auto& x : xs) s += x.get_str() + "\n";
  return s;
}

void start_watchdog(double seconds) {
  if (seconds <= 0) return;
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    std::cout.flush();
    std::cerr << "error: time limit of " << seconds << " s exceeded\n";
    std::_Exit(1);
  }).detach();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ptconf;

  CLI::App app{"Exact Poincare polynomials of point configurations, curve counts and tree counts"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--max-seconds", opt.max_seconds, "Abort after this many seconds")->check(CLI::NonNegativeNumber);

  int result = 0;
  std::vector<std::pair<CLI::App*, std::function<void()>>> actions;

  // poincare <d> <m>
  int pd = 0, pm = 0;
  auto* poincare = app.add_subcommand("poincare", "Shifted Poincare polynomial P_{d,m}");
  poincare->add_option("d", pd)->required();
  poincare->add_option("m", pm)->required();
  actions.emplace_back(poincare, [&] {
    const LaurentHalf p = poincare_dm(pd, pm);
    emit(opt, io::to_json(p), p.to_string() + "\n");
  });

  // zd <dmax> [--form exp|quadratic]
  int zmax = 0;
  std::string zform = "exp";
  auto* zd = app.add_subcommand("zd", "Coefficient rows of z_1..z_dmax");
  zd->add_option("dmax", zmax)->required()->check(CLI::PositiveNumber);
  zd->add_option("--form", zform, "Recursion to use")->check(CLI::IsMember({"exp", "quadratic"}));
  actions.emplace_back(zd, [&] {
    const auto z = z_sequence(zmax, zform == "exp" ? ZForm::exp_form : ZForm::quadratic_form);
    json rows = json::array();
    std::string text;
    for (const auto& p : z) {
      rows.push_back(io::to_json(p));
      text += io::coefficient_row(p) + "\n";
    }
    json j;
    j["form"] = zform;
    j["rows"] = std::move(rows);
    emit(opt, j, text);
  });

  // gw kontsevich|tangent <dmax>, gw moving|floor <d>
  auto* gw = app.add_subcommand("gw", "Rational curve counts in the plane");
  gw->require_subcommand(1);
  int gk = 0, gt = 0, gm = 0, gf = 0;
  auto* gw_k = gw->add_subcommand("kontsevich", "N_d through 3d-1 points, d <= dmax");
  gw_k->add_option("dmax", gk)->required()->check(CLI::PositiveNumber);
  actions.emplace_back(gw_k, [&] {
    const auto v = kontsevich(gk);
    emit(opt, json{{"kontsevich", io::to_json(v)}}, lines(v));
  });
  auto* gw_t = gw->add_subcommand("tangent", "N_d((d),0), d <= dmax");
  gw_t->add_option("dmax", gt)->required()->check(CLI::PositiveNumber);
  actions.emplace_back(gw_t, [&] {
    const auto v = tangent_N(gt);
    emit(opt, json{{"tangent", io::to_json(v)}}, lines(v));
  });
  auto* gw_m = gw->add_subcommand("moving", "N_d(0,(d))");
  gw_m->add_option("d", gm)->required()->check(CLI::PositiveNumber);
  actions.emplace_back(gw_m, [&] {
    const BigInt v = moving_N(gm);
    emit(opt, json{{"d", gm}, {"moving", v.get_str()}}, v.get_str() + "\n");
  });
  auto* gw_f = gw->add_subcommand("floor", "Floor-diagram sum for N_d((d),0)");
  gw_f->add_option("d", gf)->required()->check(CLI::PositiveNumber);
  actions.emplace_back(gw_f, [&] {
    const auto terms = floor_breakdown(gf);
    BigInt total = 0;
    json diagrams = json::array();
    std::string text;
    for (const auto& t : terms) {
      total += t.multiplicity * t.markings;
      json edges = json::array();
      for (const auto& e : t.diagram.edges) edges.push_back({e.tail, e.head, e.weight});
      diagrams.push_back({{"edges", edges}, {"multiplicity", t.multiplicity.get_str()}, {"markings", t.markings.get_str()}});
      text += t.diagram.to_string() + " mu=" + t.multiplicity.get_str() + " markings=" + t.markings.get_str() + "\n";
    }
    text += "total " + total.get_str() + "\n";
    emit(opt, json{{"d", gf}, {"diagrams", diagrams}, {"total", total.get_str()}}, text);
  });

  // euler mps|closed <d>
  auto* euler = app.add_subcommand("euler", "Euler characteristic of M_{d,2d+1}");
  euler->require_subcommand(1);
  int em = 0, ec = 0;
  auto* eu_m = euler->add_subcommand("mps", "Sum over stable spanning trees");
  eu_m->add_option("d", em)->required()->check(CLI::PositiveNumber);
  actions.emplace_back(eu_m, [&] {
    const BigInt v = chi_mps(em);
    emit(opt, json{{"d", em}, {"chi", v.get_str()}}, v.get_str() + "\n");
  });
  auto* eu_c = euler->add_subcommand("closed", "Closed composition formula");
  eu_c->add_option("d", ec)->required()->check(CLI::PositiveNumber);
  actions.emplace_back(eu_c, [&] {
    const BigInt v = chi_closed(ec);
    emit(opt, json{{"d", ec}, {"chi", v.get_str()}}, v.get_str() + "\n");
  });

  // trees count --partition l:k,... --sources m
  auto* trees = app.add_subcommand("trees", "Stable spanning trees");
  trees->require_subcommand(1);
  std::string tpart;
  int tsrc = 0;
  auto* tr_c = trees->add_subcommand("count", "Number of stable spanning trees of Q(P)");
  tr_c->add_option("--partition", tpart, "Levels and multiplicities, e.g. 1:2,2:1")->required();
  tr_c->add_option("--sources", tsrc, "Number of sources")->required()->check(CLI::PositiveNumber);
  actions.emplace_back(tr_c, [&] {
    const WPartition P = WPartition::parse(tpart);
    const BigInt v = n_stable(P, tsrc);
    emit(opt, json{{"partition", P.to_string()}, {"sources", tsrc}, {"count", v.get_str()}}, v.get_str() + "\n");
  });

  // oracle ffcount <d> <m> <p>
  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  oracle->require_subcommand(1);
  int od = 0, om = 0, op = 0;
  auto* or_ff = oracle->add_subcommand("ffcount", "Points of M_{d,m} over F_p");
  or_ff->add_option("d", od)->required();
  or_ff->add_option("m", om)->required();
  or_ff->add_option("p", op)->required();
  actions.emplace_back(or_ff, [&] {
    const BigInt v = ff_count(od, om, op);
    emit(opt, json{{"d", od}, {"m", om}, {"p", op}, {"count", v.get_str()}}, v.get_str() + "\n");
  });

  // verify <suite|all>
  std::string vname;
  auto* verify = app.add_subcommand("verify", "Run consistency suites");
  verify->add_option("suite", vname, "Suite name or 'all'")->required();
  actions.emplace_back(verify, [&] {
    const auto suites = run_suites(vname);
    json arr = json::array();
    std::string text;
    bool ok = true;
    for (const auto& s : suites) {
      arr.push_back(to_json(s));
      for (const auto& c : s.checks) {
        text += std::string(c.pass ? "[PASS] " : "[FAIL] ") + s.name + ": " + c.description;
        if (!c.witness.empty()) text += " (" + c.witness + ")";
        text += "\n";
      }
      ok = ok && s.passed();
    }
    text += ok ? "all checks passed\n" : "some checks failed\n";
    emit(opt, json{{"pass", ok}, {"suites", arr}}, text);
    if (!ok) result = 1;
  });

  try {
    app.parse(argc, argv);
    start_watchdog(opt.max_seconds);
    for (auto& [sub, action] : actions)
      if (sub->parsed()) action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return result;
}
