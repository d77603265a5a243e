// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "excalc/harness/harness.hpp"

using namespace excalc::harness;

namespace {

struct Timed {
  Report report;
  double seconds = 0.0;
};

Timed timed_run(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed t{run_suite(cfg), 0.0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

struct Outcome {
  bool ok = true;
  std::string detail;
  double worst = 0.0;
};

/// Every record must pass; listed ids must also sit under their threshold and
/// appear at least once.
Outcome check(const Report& rep, const std::map<std::string, double>& limits) {
  Outcome o;
  std::set<std::string> seen;
  for (const auto& c : rep.cases) {
    seen.insert(c.id);
    o.worst = std::max(o.worst, c.max_residual);
    const auto it = limits.find(c.id);
    const bool under = it == limits.end() || (c.max_residual <= it->second && c.tolerance <= it->second);
    if (c.status != "pass" || !under) {
      if (o.ok) o.detail = c.id + " on " + c.metric + " n=" + std::to_string(c.n) + " " + c.status;
      o.ok = false;
    }
  }
  for (const auto& [id, _] : limits)
    if (!seen.count(id)) {
      if (o.ok) o.detail = id + " missing from report";
      o.ok = false;
    }
  return o;
}

std::map<std::string, double> limits(const std::vector<std::string>& ids, double tol) {
  std::map<std::string, double> m;
  for (const auto& id : ids) m[id] = tol;
  return m;
}

int failures = 0;

void line(int n, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.empty() ? "" : " | ",
              detail.c_str());
  std::fflush(stdout);
}

template <class... A>
std::string fmt(const char* f, A... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void suite_criterion(int n, const std::string& what, const std::vector<std::string>& suites, std::vector<int> dims,
                     int points, const std::map<std::string, double>& lim, double max_seconds) {
  RunConfig cfg;
  cfg.identities = suites;
  cfg.dims = std::move(dims);
  cfg.points = points;
  const auto t = timed_run(cfg);
  auto o = check(t.report, lim);
  const bool fast = t.seconds <= max_seconds;
  std::string d = fmt("%zu cases, max residual %.2e, %.2f s", t.report.cases.size(), o.worst, t.seconds);
  if (!fast) d += fmt(" (limit %.0f s)", max_seconds);
  if (!o.detail.empty()) d += ", first problem: " + o.detail;
  line(n, o.ok && fast, what, d);
}

}  // namespace

int main() {
  suite_criterion(1, "algebraic identities, n in {2,3,4}, 100 inputs, <= 1e-10, <= 5 s", {"algebraic"}, {2, 3, 4},
                  100,
                  limits({"OHD.2a", "OHD.2b", "OHD.6", "OHD.7", "OHD.7a", "OHD.7b", "OHD.8a", "OHD.9", "OHD.9a",
                          "MV.involution", "MV.product", "MV.duality", "EXT.outermorphism", "EXT.metric_product"},
                         1e-10),
                  5.0);

  suite_criterion(2, "ordinary-derivative identities, catalog x n in {2,3}, 50 points, <= 1e-7, <= 30 s",
                  {"ordinary"}, {2, 3}, 50,
                  limits({"OHD.6a", "OHD.6b", "OHD.8b", "OHD.8c", "DI.1", "DI.2", "HDI.1", "HDI.2", "OHO.1a",
                          "OHO.2a"},
                         1e-7),
                  30.0);

  {
    auto lim = limits({"LGS.1b", "LGS.3a", "LGS.3b", "LGS.4a", "LGS.4b", "LGS.symmetry", "LGS.compat", "LGS.ricci",
                       "LCD.1a", "LCD.3", "LCD.4a", "LCD.4b", "LCD.4b2", "LCD.5"},
                      1e-7);
    lim["LCD.4b1"] = 1e-5;
    lim["LGS.christoffel"] = 1e-9;
    suite_criterion(3, "Levi-Civita identities <= 1e-7, nested <= 1e-5, Christoffel oracle <= 1e-9", {"levi_civita"},
                    {2, 3}, 50, lim, 1e9);
  }

  suite_criterion(4, "Lagrangian identities <= 1e-7, n in {2,3}", {"lagrangian"}, {2, 3}, 50,
                  limits({"LCD.6a", "LCD.6b", "LCD.6c"}, 1e-7), 1e9);

  {
    auto lim = limits({"GD.1", "GD.2", "GD.3", "GD.6", "GD.7a", "GD.7b", "GD.7c", "GD.8a", "GD.8b", "GD.eta_compat"},
                      1e-7);
    lim["GD.factorization"] = 1e-9;
    suite_criterion(5, "gauge identities <= 1e-7, factorization <= 1e-9", {"gauge"}, {2, 3}, 50, lim, 1e9);
  }

  {
    auto lim = limits({"CHC.2", "CHC.3d", "CHC.4", "CHC.5", "CHC.6a", "CHC.levi_civita", "CHC.compat"}, 1e-7);
    lim["CHC.1"] = 1e-8;
    suite_criterion(6, "covariant Hodge identities <= 1e-7, CHC.1 <= 1e-8", {"covariant_hodge"}, {2, 3}, 50, lim,
                    1e9);
  }

  {
    RunConfig cfg;
    for (const auto& e : catalog<2>())
      if (e.in_default_sweep && e.q >= 1) cfg.metrics.push_back(e.name);
    cfg.identities = {"ordinary", "levi_civita", "lagrangian", "gauge", "covariant_hodge"};
    cfg.dims = {2, 3};
    const auto lorentz = timed_run(cfg);
    std::size_t lorentz_q = 0;
    for (const auto& c : lorentz.report.cases) lorentz_q += c.q >= 1;
    const auto o = check(lorentz.report, {});

    RunConfig mut;
    mut.identities = {"ordinary"};
    mut.dims = {2, 3};
    mut.flip_star_inverse = true;
    const auto flipped = run_suite(mut);
    std::set<std::string> caught;
    for (const auto& c : flipped.cases)
      if (c.status == "fail") caught.insert(c.id);
    std::string ids;
    for (const auto& id : caught) ids += (ids.empty() ? "" : ",") + id;

    const bool ok = o.ok && lorentz_q == lorentz.report.cases.size() && !lorentz.report.cases.empty() &&
                    !caught.empty();
    std::string d = std::to_string(cfg.metrics.size()) + " Lorentzian metrics, " +
                    std::to_string(lorentz.report.count("pass")) + "/" +
                    std::to_string(lorentz.report.cases.size()) + " pass; flipped inverse star fails " +
                    std::to_string(flipped.count("fail")) + " ordinary cases (" + ids + ")";
    if (!o.detail.empty()) d += ", first problem: " + o.detail;
    line(7, ok, "signature robustness and mutation check", d);
  }

  {
    RunConfig cfg;
    cfg.points = 20;
    const auto a = to_json(run_suite(cfg)).dump();
    const auto b = to_json(run_suite(cfg)).dump();
    line(8, a == b, "identical JSON reports for identical seed and config",
         std::to_string(a.size()) + " bytes, " + (a == b ? "byte-identical" : "reports differ"));
  }

  {
    RunConfig cfg;
    cfg.identities = {"all"};
    cfg.points = 50;
    cfg.seed = 1;
    const auto t = timed_run(cfg);
    const bool ok = t.seconds < 300.0 && t.report.all_passed();
    line(9, ok, "full default run under 5 minutes",
         std::to_string(t.report.count("pass")) + "/" + std::to_string(t.report.cases.size()) + " pass, " +
             fmt("%.2f s", t.seconds));
  }

  return failures == 0 ? 0 : 1;
}
