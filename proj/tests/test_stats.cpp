#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "randmaps/errors.hpp"
#include "randmaps/map.hpp"
#include "randmaps/rng.hpp"
#include "randmaps/stats.hpp"

using namespace randmaps;

TEST_SUITE_BEGIN("stats");

TEST_CASE("EmpiricalMeasure: validation, sorting, atom merging") {
  auto m = EmpiricalMeasure::create({2.0, 1.0, 2.0}, {0.25, 0.5, 0.25});
  CHECK(m.atoms == std::vector<double>{1.0, 2.0});
  CHECK(m.masses == std::vector<double>{0.5, 0.5});
  CHECK(m.cdf(0.5) == 0.0);
  CHECK(m.cdf(1.0) == 0.5);
  CHECK(m.cdf(3.0) == 1.0);

  CHECK_THROWS_AS(EmpiricalMeasure::create({0.0}, {0.5}), ValidationError);
  CHECK_THROWS_AS(EmpiricalMeasure::create({0.0, 1.0}, {1.5, -0.5}),
                  ValidationError);
  CHECK_THROWS_AS(EmpiricalMeasure::create({}, {}), ValidationError);

  auto f = EmpiricalMeasure::from_samples({3.0, 1.0, 3.0, 5.0});
  CHECK(f.atoms == std::vector<double>{1.0, 3.0, 5.0});
  CHECK(f.masses[1] == doctest::Approx(0.5));

  std::string csv = f.write_csv();
  CHECK(csv.rfind("atom,mass\n", 0) == 0);
}

TEST_CASE("rescale_profile: direct formula") {
  DistanceProfile single{ProfileKind::Edge, {0}};
  auto m0 = rescale_profile(single, 2.0);
  CHECK(m0.atoms == std::vector<double>{0.0});
  CHECK(m0.masses == std::vector<double>{1.0});

  DistanceProfile p{ProfileKind::Edge, {0, 1, 1, 2}};
  auto mu = rescale_profile(p, 2.0);
  const double unit = std::pow(8.0, -0.25);
  REQUIRE(mu.atoms.size() == 3);
  CHECK(mu.atoms[0] == doctest::Approx(0.0));
  CHECK(mu.atoms[1] == doctest::Approx(unit));
  CHECK(mu.atoms[2] == doctest::Approx(2 * unit));
  CHECK(mu.masses == std::vector<double>{0.25, 0.5, 0.25});
  CHECK(mu.sup() == doctest::Approx(2.0 / std::pow(2.0 * 4, 0.25)));

  double mass = 0;
  for (double w : mu.masses) mass += w;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::is_sorted(mu.atoms.begin(), mu.atoms.end()));
}

TEST_CASE("ks_distance: fixed points and metric properties") {
  auto d0 = EmpiricalMeasure::create({0.0}, {1.0});
  auto mix = EmpiricalMeasure::create({0.0, 1.0}, {0.5, 0.5});
  auto right = EmpiricalMeasure::create({5.0, 6.0}, {0.5, 0.5});

  CHECK(ks_distance(mix, mix) == 0.0);
  CHECK(ks_distance(d0, right) == 1.0);
  CHECK(ks_distance(d0, mix) == doctest::Approx(0.5));

  Rng rng = derive_stream(83);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    auto rand_measure = [&] {
      std::vector<double> atoms;
      for (int i = 0; i < 5; ++i) atoms.push_back(u(rng));
      return EmpiricalMeasure::from_samples(std::move(atoms));
    };
    auto a = rand_measure(), b = rand_measure(), c = rand_measure();
    CHECK(ks_distance(a, b) == doctest::Approx(ks_distance(b, a)));
    CHECK(ks_distance(a, c) <= ks_distance(a, b) + ks_distance(b, c) + 1e-12);
    CHECK(ks_distance(a, b) >= 0.0);
  }
}

TEST_CASE("shift_nonnegative and width") {
  auto m = EmpiricalMeasure::create({-1.0, 2.0}, {0.5, 0.5});
  auto s = shift_nonnegative(m);
  CHECK(s.atoms == std::vector<double>{0.0, 3.0});
  CHECK(width(m) == doctest::Approx(3.0));
  CHECK(width(s) == doctest::Approx(width(m)));

  auto already = EmpiricalMeasure::create({0.0, 4.0}, {0.5, 0.5});
  CHECK(shift_nonnegative(already).atoms == already.atoms);
}

TEST_CASE("mean_measure averages masses") {
  auto a = EmpiricalMeasure::create({0.0}, {1.0});
  auto b = EmpiricalMeasure::create({1.0}, {1.0});
  auto m = mean_measure({a, b});
  CHECK(m.atoms == std::vector<double>{0.0, 1.0});
  CHECK(m.masses[0] == doctest::Approx(0.5));
}

TEST_CASE("ExperimentConfig::from_json: schema and JSON-pointer errors") {
  auto cfg = ExperimentConfig::from_json(
      R"({"kind":"radius","sizes":[100,200],"replicas":7,"seed":3,
          "snake_grid":50,"output":"out.csv"})");
  CHECK(cfg.kind == ExperimentKind::Radius);
  CHECK(cfg.sizes == std::vector<int>{100, 200});
  CHECK(cfg.replicas == 7);
  CHECK(cfg.seed == 3);
  CHECK(cfg.snake_grid == 50);
  CHECK(cfg.output_path == "out.csv");

  auto expect_path = [](const std::string& text, const std::string& ptr) {
    try {
      ExperimentConfig::from_json(text);
      CHECK(false);
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find(ptr) != std::string::npos);
    }
  };
  expect_path(R"({"sizes":[1],"replicas":1,"seed":0})", "/kind");
  expect_path(R"({"kind":"banana","sizes":[1],"replicas":1,"seed":0})",
              "/kind");
  expect_path(R"({"kind":"radius","replicas":1,"seed":0})", "/sizes");
  expect_path(R"({"kind":"radius","sizes":[5,0],"replicas":1,"seed":0})",
              "/sizes/1");
  expect_path(R"({"kind":"radius","sizes":[5],"seed":0})", "/replicas");
  expect_path(R"({"kind":"radius","sizes":[5],"replicas":1})", "/seed");
  expect_path(
      R"({"kind":"looptree","sizes":[5],"replicas":1,"seed":0,"alpha":2.5})",
      "/alpha");
  CHECK_THROWS_AS(ExperimentConfig::from_json("not json"), ValidationError);
}

TEST_CASE("run_experiment: shape, determinism, thread independence") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::Radius;
  cfg.sizes = {50, 100};
  cfg.replicas = 20;
  cfg.seed = 12;
  cfg.snake_grid = 0;  // skip the oracle in this smoke test

  auto r1 = run_experiment(cfg);
  auto r2 = run_experiment(cfg);
  CHECK(r1.csv == r2.csv);
  CHECK(r1.summary_json == r2.summary_json);
  CHECK(std::count(r1.csv.begin(), r1.csv.end(), '\n') == 41);  // header + 40
  CHECK(r1.csv.rfind("kind,n,replica,statistic,value\n", 0) == 0);

  setenv("RANDMAPS_THREADS", "4", 1);
  auto r4 = run_experiment(cfg);
  setenv("RANDMAPS_THREADS", "1", 1);
  auto r1t = run_experiment(cfg);
  unsetenv("RANDMAPS_THREADS");
  CHECK(r4.csv == r1.csv);
  CHECK(r1t.csv == r1.csv);
}

TEST_CASE("run_experiment: snake and profile kinds smoke") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::Snake;
  cfg.sizes = {100};
  cfg.replicas = 10;
  cfg.seed = 4;
  auto r = run_experiment(cfg);
  CHECK(std::count(r.csv.begin(), r.csv.end(), '\n') == 11);

  ExperimentConfig pc;
  pc.kind = ExperimentKind::Profile;
  pc.sizes = {20, 40};
  pc.replicas = 5;
  pc.seed = 8;
  auto pr = run_experiment(pc);
  REQUIRE(pr.mean_measures.size() == 2);
  for (const auto& m : pr.mean_measures) {
    double mass = 0;
    for (double w : m.masses) mass += w;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.inf() == 0.0);  // shifted profiles
  }
  CHECK(pr.summary_json.find("mean_measure_ks") != std::string::npos);
}

TEST_SUITE_END();
