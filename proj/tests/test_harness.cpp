#include <gtest/gtest.h>

#include <set>

#include "excalc/harness/harness.hpp"
#include "oracles.hpp"

using namespace excalc;
using namespace excalc::harness;

TEST(Registry, EveryRequiredIdHasItsOwnCase) {
  for (const auto& id : required_ids()) {
    EXPECT_NO_THROW(find_case<2>(id)) << id;
    EXPECT_NO_THROW(find_case<3>(id)) << id;
  }
  EXPECT_THROW(find_case<2>("NOPE.1"), std::invalid_argument);
}

TEST(Registry, CoverageTableIsConsistent) {
  std::set<std::string> labels;
  for (const auto& c : coverage()) {
    EXPECT_TRUE(labels.insert(c.label).second) << "duplicate label " << c.label;
    if (!c.case_id.empty()) EXPECT_NO_THROW(find_case<3>(c.case_id)) << c.label;
    else EXPECT_FALSE(c.note.empty()) << c.label;
  }
  for (const auto& id : required_ids()) EXPECT_TRUE(labels.count(id)) << id;
}

TEST(Registry, SelectionBySuiteAndId) {
  const auto lag = select_identities<2>({"lagrangian"});
  EXPECT_EQ(lag, (std::vector<std::string>{"LCD.6a", "LCD.6b", "LCD.6c"}));
  const auto mixed = select_identities<2>({"GD.2", "DI.1", "DI.1"});
  EXPECT_EQ(mixed.size(), 2u);
  EXPECT_EQ(select_identities<3>({"all"}).size(), registry<3>().size());
  EXPECT_THROW(select_identities<2>({"bogus"}), std::invalid_argument);
}

TEST(Catalog, EntriesHaveDeclaredSignature) {
  for (const auto& e : catalog<3>()) {
    if (!e.in_default_sweep) continue;
    const auto g = e.metric();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-0.95, 0.95);
    for (int t = 0; t < 100; ++t) {
      const Vector<double, 3> x{u(rng), u(rng), u(rng)};
      EXPECT_NO_THROW(g.check(x)) << e.name;
    }
  }
}

TEST(Catalog, ExampleEntries) {
  const auto mink = catalog_entry<3>("minkowski").metric();
  EXPECT_EQ(mink.q(), 2);
  EXPECT_EQ(mink.g(Vector<double, 3>{0.1, 0.2, 0.3})(1, 1), -1.0);
  const auto plus = catalog_entry<3>("minkowski_mostly_plus").metric();
  EXPECT_EQ(plus.q(), 1);
  EXPECT_EQ(plus.layout()[0], -1);
  const auto diag = catalog_entry<2>("diag_poly").metric();
  const auto m = diag.g(Vector<double, 2>{0.5, -1.0});
  EXPECT_DOUBLE_EQ(m(0, 0), 1.25);
  EXPECT_DOUBLE_EQ(m(1, 1), 3.0);
  const auto origin = catalog_entry<3>("diag_poly").metric().g(Vector<double, 3>{});
  EXPECT_DOUBLE_EQ(origin(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(origin(1, 1), 2.0);
  EXPECT_DOUBLE_EQ(origin(2, 2), 3.0);
  const auto eu = catalog_entry<4>("euclidean").metric().g(Vector<double, 4>{0.3, 0.1, -0.2, 0.9});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(eu(i, j), i == j ? 1.0 : 0.0);
  EXPECT_THROW(catalog_entry<2>("nope"), std::invalid_argument);
  const auto names = default_sweep_names();
  EXPECT_EQ(std::count(names.begin(), names.end(), "degenerate_at_origin"), 0);
}

TEST(Runner, SinglePointVerificationExamples) {
  const auto di = verify_identity<2>("DI.1", "euclidean", 20);
  EXPECT_EQ(di.status, "pass");
  EXPECT_LE(di.max_residual, 1e-10);
  EXPECT_EQ(di.evaluated, 20);

  const auto golden = verify_identity<3>("GD.7a", "conformal", 10);
  EXPECT_EQ(golden.status, "pass");

  const auto nested = verify_identity<2>("LCD.4b1", "diag_poly", 10);
  EXPECT_EQ(nested.status, "pass");
  EXPECT_LE(nested.max_residual, 1e-5);
}

TEST(Runner, EuclideanSweepIsAtRoundoffLevel) {
  RunConfig cfg;
  cfg.metrics = {"euclidean"};
  cfg.dims = {3};
  cfg.points = 10;
  const auto rep = run_suite(cfg);
  ASSERT_FALSE(rep.cases.empty());
  for (const auto& c : rep.cases) {
    EXPECT_EQ(c.status, "pass") << c.id;
    EXPECT_LE(c.max_residual, c.derivative_order == 2 ? 1e-5 : 1e-10) << c.id;
  }
}

TEST(Runner, DegenerateMetricIsReportedNotFatal) {
  RunConfig cfg;
  cfg.metrics = {"degenerate_at_origin"};
  cfg.dims = {2};
  cfg.points = 5;
  cfg.identities = {"HDI.2", "OHD.8b"};
  const auto rep = run_suite(cfg);
  ASSERT_EQ(rep.cases.size(), 2u);
  const auto& hdi = rep.cases[0].id == "HDI.2" ? rep.cases[0] : rep.cases[1];
  EXPECT_EQ(hdi.status, "error");
  ASSERT_FALSE(hdi.diagnostics.empty());
  EXPECT_NE(hdi.diagnostics[0].find("singular"), std::string::npos);
  EXPECT_NE(hdi.diagnostics[0].find("(0, 0)"), std::string::npos);
  EXPECT_EQ(hdi.evaluated, hdi.points - hdi.diagnostic_count);
}

TEST(Runner, SameSeedGivesIdenticalReports) {
  RunConfig cfg;
  cfg.dims = {2};
  cfg.points = 5;
  cfg.identities = {"ordinary", "gauge"};
  cfg.threads = 1;
  const auto a = to_json(run_suite(cfg)).dump();
  const auto b = to_json(run_suite(cfg)).dump();
  EXPECT_EQ(a, b);
  cfg.threads = 4;
  const auto c = to_json(run_suite(cfg));
  EXPECT_EQ(to_json(run_suite(cfg))["cases"].dump(), c["cases"].dump());
  EXPECT_EQ(nlohmann::ordered_json::parse(a)["cases"].dump(), c["cases"].dump());
  cfg.seed = 2;
  EXPECT_NE(to_json(run_suite(cfg))["cases"].dump(), c["cases"].dump());
}

TEST(Runner, ToleranceOverrideIsApplied) {
  RunConfig cfg;
  cfg.metrics = {"perturbed"};
  cfg.dims = {2};
  cfg.points = 5;
  cfg.identities = {"HDI.2"};
  cfg.tol_override["HDI.2"] = 1e-30;
  const auto rep = run_suite(cfg);
  ASSERT_EQ(rep.cases.size(), 1u);
  EXPECT_EQ(rep.cases[0].tolerance, 1e-30);
  EXPECT_EQ(rep.cases[0].status, "fail");
  cfg.tol_override = {{"XX.9", 1.0}};
  EXPECT_THROW(run_suite(cfg), std::invalid_argument);
}

TEST(Runner, FlippedInverseStarFailsOrdinarySuite) {
  RunConfig cfg;
  cfg.metrics = {"diag_poly", "minkowski"};
  cfg.dims = {2, 3};
  cfg.points = 5;
  cfg.identities = {"HDI.2", "OHO.2a", "DI.1"};
  cfg.flip_star_inverse = true;
  const auto rep = run_suite(cfg);
  for (const auto& c : rep.cases) EXPECT_EQ(c.status, c.id == "DI.1" ? "pass" : "fail") << c.id << " " << c.metric;
}

TEST(Report, ConfigRoundTripAndValidation) {
  const auto j = nlohmann::json::parse(
      R"({"metric": "conformal", "dims": [2, 3], "identities": "DI.1,gauge", "points": 7, "seed": 9,
          "tol_override": {"DI.1": 1e-9}, "format": "json"})");
  const auto cfg = config_from_json(j);
  EXPECT_EQ(cfg.metrics, std::vector<std::string>{"conformal"});
  EXPECT_EQ(cfg.dims, (std::vector<int>{2, 3}));
  EXPECT_EQ(cfg.identities, (std::vector<std::string>{"DI.1", "gauge"}));
  EXPECT_EQ(cfg.points, 7);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.tol_override.at("DI.1"), 1e-9);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"pionts": 3})")), std::invalid_argument);

  RunConfig bad;
  bad.dims = {5};
  EXPECT_THROW(validate(bad), std::invalid_argument);
  bad.dims = {2};
  bad.metrics = {"nope"};
  EXPECT_THROW(validate(bad), std::invalid_argument);
}

TEST(Report, JsonLayout) {
  RunConfig cfg;
  cfg.metrics = {"euclidean"};
  cfg.dims = {2};
  cfg.points = 3;
  cfg.identities = {"OHD.2a"};
  const auto j = to_json(run_suite(cfg));
  EXPECT_EQ(j["run"]["seed"], 1);
  EXPECT_EQ(j["run"]["catalog_version"], kCatalogVersion);
  ASSERT_EQ(j["cases"].size(), 1u);
  EXPECT_EQ(j["cases"][0]["id"], "OHD.2a");
  EXPECT_EQ(j["cases"][0]["status"], "pass");
  EXPECT_EQ(j["summary"]["passed"], 1);
}
