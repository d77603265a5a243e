#pragma once

/**
 * @file runner.hpp
 * @brief Suite runner: evaluates (identity x metric x dimension) cases over
 *        seeded sample points, optionally on several threads.
 */

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "excalc/harness/registry.hpp"

namespace excalc::harness {

struct RunConfig {
  /// Empty means every catalog entry in the default sweep.
  std::vector<std::string> metrics;
  std::vector<int> dims{2, 3};
  std::vector<std::string> identities{"all"};
  int points = 50;
  std::uint64_t seed = 1;
  std::map<std::string, double> tol_override;
  /// Mutation check: negate star_g^{-1} everywhere.
  bool flip_star_inverse = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct CaseRecord {
  std::string id;
  std::string suite;
  std::string metric;
  int n = 0;
  int p = 0;
  int q = 0;
  int derivative_order = 0;
  int points = 0;     ///< requested points, anchors included
  int evaluated = 0;  ///< points that produced a residual
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double tolerance = 0.0;
  std::string status;  ///< pass, fail or error
  std::vector<double> worst_point;
  int diagnostic_count = 0;
  std::vector<std::string> diagnostics;  ///< first few error messages, in point order
};

struct Report {
  RunConfig config;
  std::vector<std::string> metrics;
  std::vector<CaseRecord> cases;

  std::size_t count(const std::string& status) const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [&](const CaseRecord& c) { return c.status == status; }));
  }
  bool all_passed() const { return count("pass") == cases.size(); }
};

inline constexpr int kMaxStoredDiagnostics = 5;
/// Fraction of the box width excluded at each face when sampling.
inline constexpr double kSampleMargin = 0.05;

/// Validates names and dimensions; throws std::invalid_argument.
inline void validate(const RunConfig& cfg) {
  if (cfg.points < 0) throw std::invalid_argument("points must be non-negative");
  if (cfg.dims.empty()) throw std::invalid_argument("no dimensions selected");
  for (int n : cfg.dims)
    if (n < 1 || n > kMaxHarnessDimension)
      throw std::invalid_argument("dimension " + std::to_string(n) + " outside 1.." +
                                  std::to_string(kMaxHarnessDimension));
  const auto names = catalog_names();
  for (const auto& m : cfg.metrics)
    if (std::find(names.begin(), names.end(), m) == names.end())
      throw std::invalid_argument("unknown catalog metric '" + m + "'");
  for (const auto& [id, tol] : cfg.tol_override) {
    (void)find_case<2>(id);
    if (!(tol > 0)) throw std::invalid_argument("tolerance for " + id + " must be positive");
  }
  (void)select_identities<2>(cfg.identities);
}

template <std::size_t N>
std::vector<Vector<double, N>> sample_points(const MetricCatalogEntry<N>& e, int k, std::uint64_t seed) {
  std::vector<Vector<double, N>> pts = e.anchors;
  Rng rng(seed);
  for (int i = 0; i < k; ++i) {
    Vector<double, N> p;
    for (std::size_t j = 0; j < N; ++j) {
      const double w = e.box.hi[j] - e.box.lo[j];
      p[j] = uniform(rng, e.box.lo[j] + kSampleMargin * w, e.box.hi[j] - kSampleMargin * w);
    }
    pts.push_back(p);
  }
  return pts;
}

template <std::size_t N>
std::string format_point(const Vector<double, N>& x) {
  std::vector<double> v(x.begin(), x.end());
  return ::excalc::detail::format_point(v);
}

template <std::size_t N>
CaseRecord evaluate_case(const IdentityCase<N>& ic, const Context<N>& ctx, const std::vector<Vector<double, N>>& pts,
                         std::uint64_t seed, const RunConfig& cfg) {
  CaseRecord r;
  r.id = ic.id;
  r.suite = suite_name(ic.suite);
  r.metric = ctx.entry.name;
  r.n = static_cast<int>(N);
  r.q = ctx.g.q();
  r.p = ctx.g.p();
  r.derivative_order = ic.derivative_order;
  r.points = static_cast<int>(pts.size());
  const auto ov = cfg.tol_override.find(ic.id);
  r.tolerance = ov != cfg.tol_override.end() ? ov->second : ic.tolerance;

  Rng rng(seed);
  double sum = 0.0;
  bool failed = false;
  for (const auto& x : pts) {
    try {
      const double res = ic.residual(ctx, rng, x);
      if (!std::isfinite(res)) throw std::runtime_error("non-finite residual");
      ++r.evaluated;
      sum += res;
      if (r.worst_point.empty() || res > r.max_residual) {
        r.max_residual = res;
        r.worst_point.assign(x.begin(), x.end());
      }
      if (!(res <= r.tolerance)) failed = true;
    } catch (const std::exception& ex) {
      ++r.diagnostic_count;
      if (r.diagnostic_count <= kMaxStoredDiagnostics) {
        const std::string what = ex.what();
        r.diagnostics.push_back(what.find(" at (") != std::string::npos ? what : what + " at " + format_point(x));
      }
    }
  }
  r.mean_residual = r.evaluated ? sum / r.evaluated : 0.0;
  r.status = r.diagnostic_count ? "error" : (failed ? "fail" : "pass");
  return r;
}

/**
 * Residual statistics of one identity on one metric. The entry may be a
 * catalog entry or a host-built one wrapping any metric closure.
 */
template <std::size_t N>
CaseRecord verify_identity(const std::string& id, const MetricCatalogEntry<N>& entry, int points,
                           std::uint64_t seed = 1) {
  RunConfig cfg;
  cfg.points = points;
  cfg.seed = seed;
  const Context<N> ctx(entry, SeedHash().add(seed).add("context").add(entry.name).add(N).value(), false);
  const auto pts = sample_points(entry, points, SeedHash().add(seed).add("points").add(entry.name).add(N).value());
  return evaluate_case(find_case<N>(id), ctx, pts, SeedHash().add(seed).add(id).add(entry.name).add(N).value(), cfg);
}

template <std::size_t N>
CaseRecord verify_identity(const std::string& id, const std::string& metric, int points, std::uint64_t seed = 1) {
  return verify_identity<N>(id, catalog_entry<N>(metric), points, seed);
}

namespace detail {

using Task = std::function<CaseRecord()>;

template <std::size_t N>
void plan_dimension(const RunConfig& cfg, const std::vector<std::string>& metrics, std::vector<Task>& tasks,
                    std::vector<std::shared_ptr<void>>& keep) {
  const auto ids = select_identities<N>(cfg.identities);
  for (const auto& name : metrics) {
    const std::uint64_t ctx_seed = SeedHash().add(cfg.seed).add("context").add(name).add(N).value();
    auto ctx = std::make_shared<Context<N>>(catalog_entry<N>(name), ctx_seed, cfg.flip_star_inverse);
    const std::uint64_t pt_seed = SeedHash().add(cfg.seed).add("points").add(name).add(N).value();
    auto pts = std::make_shared<std::vector<Vector<double, N>>>(sample_points(ctx->entry, cfg.points, pt_seed));
    keep.push_back(ctx);
    keep.push_back(pts);
    for (const auto& id : ids) {
      const auto* ic = &find_case<N>(id);
      const std::uint64_t s = SeedHash().add(cfg.seed).add(id).add(name).add(N).value();
      tasks.push_back([ic, ctx, pts, s, &cfg] { return evaluate_case(*ic, *ctx, *pts, s, cfg); });
    }
  }
}

}  // namespace detail

/// Runs every selected case. Records are sorted by id, metric and dimension.
inline Report run_suite(const RunConfig& cfg) {
  validate(cfg);
  Report report;
  report.config = cfg;
  report.metrics = cfg.metrics.empty() ? default_sweep_names() : cfg.metrics;

  std::vector<detail::Task> tasks;
  std::vector<std::shared_ptr<void>> keep;
  for (int n : cfg.dims) {
    switch (n) {
      case 1:
        detail::plan_dimension<1>(cfg, report.metrics, tasks, keep);
        break;
      case 2:
        detail::plan_dimension<2>(cfg, report.metrics, tasks, keep);
        break;
      case 3:
        detail::plan_dimension<3>(cfg, report.metrics, tasks, keep);
        break;
      case 4:
        detail::plan_dimension<4>(cfg, report.metrics, tasks, keep);
        break;
    }
  }

  std::vector<CaseRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) records[i] = tasks[i]();
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::sort(records.begin(), records.end(), [](const CaseRecord& a, const CaseRecord& b) {
    return std::tie(a.id, a.metric, a.n) < std::tie(b.id, b.metric, b.n);
  });
  report.cases = std::move(records);
  return report;
}

}  // namespace excalc::harness
