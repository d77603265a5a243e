// excalc command-line tool: verify identities over the metric catalog, list
// the catalog, the registered identities and the equation coverage table.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "excalc/harness/harness.hpp"

namespace h = excalc::harness;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    for (std::string s; std::getline(ss, s, ',');)
      if (!s.empty()) out.push_back(s);
  }
  return out;
}

int list_catalog() {
  for (const auto& e : h::catalog<2>())
    std::printf("%-22s q=%-8s %s%s\n", e.name.c_str(), e.name.find("minkowski") != std::string::npos ||
                                                              e.name.find("lorentz") != std::string::npos
                                                          ? (e.name == "minkowski_mostly_plus" ? "1" : "n-1")
                                                          : "0",
                e.description.c_str(), e.in_default_sweep ? "" : "  [not in default sweep]");
  return kExitPass;
}

int list_identities() {
  for (const auto& c : h::registry<2>())
    std::printf("%-20s %-16s order=%d tol=%-8.1e %s\n", c.id.c_str(), h::suite_name(c.suite), c.derivative_order,
                c.tolerance, c.description.c_str());
  return kExitPass;
}

int list_coverage() {
  for (const auto& c : h::coverage())
    std::printf("%-8s %-18s %s\n", c.label.c_str(), c.case_id.empty() ? "-" : c.case_id.c_str(), c.note.c_str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multivector and extensor calculus identity verifier"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Evaluate identities over catalog metrics and report residuals");
  std::string config_file, format = "text", out_file;
  std::vector<std::string> metrics, identities, overrides;
  std::vector<int> dims;
  int points = -1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool flip = false;
  verify->add_option("--config", config_file, "JSON file whose keys mirror these flags")->check(CLI::ExistingFile);
  verify->add_option("--metric", metrics, "catalog metric name(s); default: the whole default sweep")
      ->delimiter(',');
  verify->add_option("--dim", dims, "dimension(s) n, 1 to 4; default 2,3")->delimiter(',');
  verify->add_option("--identities", identities, "identity ids, suite names or 'all'")->delimiter(',');
  auto* points_opt = verify->add_option("--points", points, "random sample points per case (default 50)");
  auto* seed_opt = verify->add_option("--seed", seed, "random seed (default 1)");
  verify->add_option("--tol-override", overrides, "ID=VALUE tolerance override, repeatable");
  auto* format_opt = verify->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_file, "write the report to this file instead of stdout");
  verify->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
  verify->add_flag("--flip-star-inverse", flip, "negate the metric inverse Hodge map (mutation check)");

  app.add_subcommand("catalog", "List catalog metrics");
  app.add_subcommand("identities", "List registered identity cases");
  app.add_subcommand("coverage", "List every labelled equation with its case or note");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (app.got_subcommand("catalog")) return list_catalog();
  if (app.got_subcommand("identities")) return list_identities();
  if (app.got_subcommand("coverage")) return list_coverage();

  h::RunConfig cfg;
  try {
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      const auto j = nlohmann::json::parse(in);
      cfg = h::config_from_json(j, cfg);
      if (j.contains("format") && !format_opt->count()) format = j["format"].get<std::string>();
      if (j.contains("out") && out_file.empty()) out_file = j["out"].get<std::string>();
      if (format != "json" && format != "text") throw std::invalid_argument("format must be json or text");
    }
    if (!metrics.empty()) cfg.metrics = split_list(metrics);
    if (!dims.empty()) cfg.dims = dims;
    if (!identities.empty()) cfg.identities = split_list(identities);
    if (points_opt->count()) cfg.points = points;
    if (seed_opt->count()) cfg.seed = seed;
    if (threads) cfg.threads = threads;
    if (flip) cfg.flip_star_inverse = true;
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--tol-override expects ID=VALUE, got '" + o + "'");
      cfg.tol_override[o.substr(0, eq)] = std::stod(o.substr(eq + 1));
    }
    h::validate(cfg);
  } catch (const std::exception& e) {
    std::cerr << "excalc verify: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto report = h::run_suite(cfg);
  const std::string body = format == "json" ? h::to_json(report).dump(2) + "\n" : h::to_text(report);
  if (out_file.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_file);
    if (!out) {
      std::cerr << "excalc verify: cannot write " << out_file << "\n";
      return kExitUsage;
    }
    out << body;
  }
  return report.all_passed() ? kExitPass : kExitFail;
}
