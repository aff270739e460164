#ifndef RANDMAPS_STATS_HPP
#define RANDMAPS_STATS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "randmaps/map.hpp"

namespace randmaps {

// Finite probability measure on the line: sorted atoms, positive masses
// summing to 1 within 1e-12.
struct EmpiricalMeasure {
  std::vector<double> atoms;
  std::vector<double> masses;

  static EmpiricalMeasure create(std::vector<double> atoms,
                                 std::vector<double> masses);
  static EmpiricalMeasure from_samples(std::vector<double> samples);

  double inf() const { return atoms.front(); }
  double sup() const { return atoms.back(); }
  double cdf(double x) const;
  std::string write_csv() const;  // atom,mass lines
};

// mu_a: atom x_i / (a*n)^{1/4} with mass 1/n each (n = profile size).
EmpiricalMeasure rescale_profile(const DistanceProfile& p, double a);

double ks_distance(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu);

EmpiricalMeasure shift_nonnegative(const EmpiricalMeasure& mu);
double width(const EmpiricalMeasure& mu);

// equal-weight average of measures
EmpiricalMeasure mean_measure(const std::vector<EmpiricalMeasure>& ms);

enum class ExperimentKind { Profile, Radius, Looptree, Snake };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Radius;
  std::vector<int> sizes;       // faces / vertices / grid sizes per kind
  int replicas = 100;
  std::uint64_t seed = 1;
  double rescale_a = 8.0 / 9.0;  // (a*n)^{1/4} divisor for profile measures
  double alpha = 1.5;            // looptree kind
  int snake_grid = 2000;         // radius kind: oracle grid (0 = skip oracle)
  int snake_replicas = 0;        // radius kind: oracle replicas (0 = replicas)
  std::string output_path = "experiment.csv";

  // Throws ValidationError with a JSON-pointer-style path on schema errors.
  static ExperimentConfig from_json(const std::string& text);
};

struct ExperimentResult {
  std::string csv;           // header kind,n,replica,statistic,value
  std::string summary_json;  // pairwise KS distances and oracle comparisons
  // per-size mean profile measures (profile kind only), parallel to sizes
  std::vector<EmpiricalMeasure> mean_measures;
};

// Deterministic given the config: replica r of size index s uses the stream
// derived from (seed, s, r); parallel execution (RANDMAPS_THREADS) does not
// change the output.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace randmaps

#endif
