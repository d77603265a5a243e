#pragma once

/**
 * @file report.hpp
 * @brief JSON and plain-text serialization of run reports and configs.
 */

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "excalc/harness/runner.hpp"

namespace excalc::harness {

inline nlohmann::ordered_json config_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["metrics"] = c.metrics;
  j["dims"] = c.dims;
  j["identities"] = c.identities;
  j["points"] = c.points;
  j["seed"] = c.seed;
  nlohmann::ordered_json ov = nlohmann::ordered_json::object();
  for (const auto& [id, tol] : c.tol_override) ov[id] = tol;
  j["tol_override"] = ov;
  if (c.flip_star_inverse) j["flip_star_inverse"] = true;
  return j;
}

/// Reads a config object whose keys mirror the CLI flags. Unknown keys are errors.
inline RunConfig config_from_json(const nlohmann::json& j, RunConfig c = {}) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "metric" || key == "metrics") {
      c.metrics = v.is_array() ? v.get<std::vector<std::string>>() : std::vector<std::string>{v.get<std::string>()};
    } else if (key == "dim" || key == "dims" || key == "n") {
      c.dims = v.is_array() ? v.get<std::vector<int>>() : std::vector<int>{v.get<int>()};
    } else if (key == "identities") {
      if (v.is_array()) {
        c.identities = v.get<std::vector<std::string>>();
      } else {
        c.identities.clear();
        std::stringstream ss(v.get<std::string>());
        for (std::string item; std::getline(ss, item, ',');)
          if (!item.empty()) c.identities.push_back(item);
      }
    } else if (key == "points") {
      c.points = v.get<int>();
    } else if (key == "seed") {
      c.seed = v.get<std::uint64_t>();
    } else if (key == "tol_override" || key == "tol-override") {
      for (const auto& [id, tol] : v.items()) c.tol_override[id] = tol.get<double>();
    } else if (key == "threads") {
      c.threads = v.get<unsigned>();
    } else if (key == "flip_star_inverse") {
      c.flip_star_inverse = v.get<bool>();
    } else if (key == "format" || key == "out") {
      // consumed by the CLI
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  return c;
}

inline nlohmann::ordered_json to_json(const CaseRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["suite"] = r.suite;
  j["metric"] = r.metric;
  j["n"] = r.n;
  j["signature"] = {{"p", r.p}, {"q", r.q}};
  j["derivative_order"] = r.derivative_order;
  j["points"] = r.points;
  j["evaluated"] = r.evaluated;
  j["max_residual"] = r.max_residual;
  j["mean_residual"] = r.mean_residual;
  j["tolerance"] = r.tolerance;
  j["status"] = r.status;
  j["worst_point"] = r.worst_point;
  if (r.diagnostic_count) {
    j["diagnostic_count"] = r.diagnostic_count;
    j["diagnostics"] = r.diagnostics;
  }
  return j;
}

inline nlohmann::ordered_json to_json(const Report& rep) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json run;
  run["seed"] = rep.config.seed;
  run["catalog_version"] = kCatalogVersion;
  run["default_tolerances"] = {{"algebraic", kTolAlgebraic}, {"jet", kTolJet}, {"nested", kTolNested}};
  run["config"] = config_to_json(rep.config);
  run["metrics"] = rep.metrics;
  j["run"] = run;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const auto& c : rep.cases) cases.push_back(to_json(c));
  j["cases"] = cases;
  j["summary"] = {{"total", rep.cases.size()},
                  {"passed", rep.count("pass")},
                  {"failed", rep.count("fail")},
                  {"errors", rep.count("error")}};
  return j;
}

inline std::string to_text(const Report& rep) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-20s %-22s %2s %5s %7s %12s %10s  %s\n", "identity", "metric", "n", "(p,q)",
                "points", "max_resid", "tol", "status");
  os << line;
  for (const auto& c : rep.cases) {
    const std::string sig = "(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
    std::snprintf(line, sizeof line, "%-20s %-22s %2d %5s %7d %12.3e %10.1e  %s\n", c.id.c_str(), c.metric.c_str(),
                  c.n, sig.c_str(), c.points, c.max_residual, c.tolerance, c.status.c_str());
    os << line;
    for (const auto& d : c.diagnostics) os << "    ! " << d << "\n";
    if (c.diagnostic_count > static_cast<int>(c.diagnostics.size()))
      os << "    ! ... " << (c.diagnostic_count - static_cast<int>(c.diagnostics.size())) << " more\n";
  }
  os << "\n"
     << rep.cases.size() << " cases: " << rep.count("pass") << " passed, " << rep.count("fail") << " failed, "
     << rep.count("error") << " with errors (seed " << rep.config.seed << ", catalog " << kCatalogVersion << ")\n";
  return os.str();
}

}  // namespace excalc::harness
