#ifndef RANDMAPS_SNAKE_HPP
#define RANDMAPS_SNAKE_HPP

#include <vector>

#include "randmaps/rng.hpp"
#include "randmaps/stats.hpp"

namespace randmaps {

// Discretized Brownian snake's head on the grid t_i = i/m: excursion e and
// label process Z, with e_0 = e_m = 0 and Z_0 = 0.
struct SnakePath {
  std::vector<double> e;  // size m+1
  std::vector<double> z;  // size m+1

  int grid_size() const { return static_cast<int>(e.size()) - 1; }
};

// Normalized Brownian excursion approximation: discrete Brownian bridge
// (increments N(0, 1/m), pinned at 0) rotated at its earliest argmin.
std::vector<double> sample_excursion(int m, Rng& rng);

// Factorized min-covariance kernel K_ij = min e over [t_i^t_j, t_i v t_j],
// reusable read-only across replicas. Grid points with e_i = 0 are handled as
// deterministic zeros; the Cholesky diagonal gets jitter 1e-12..1e-10 before
// giving up.
class SnakeKernel {
 public:
  explicit SnakeKernel(const std::vector<double>& e);
  std::vector<double> sample(Rng& rng) const;
  double covariance(int i, int j) const;  // kernel entry, for oracle checks

 private:
  int m_;
  std::vector<int> active_;          // grid indices with e_i > 0
  std::vector<double> chol_;         // lower-triangular factor, row-major
  std::vector<double> e_;
};

// Exact conditional Gaussian sample of Z given e, via the factored kernel.
std::vector<double> sample_label_process(const std::vector<double>& e, Rng& rng);

// Same law, O(m): walks the tree coded by e keeping the ancestral lineage as
// a stack of (height, value) pairs, bridging to branch points exactly.
std::vector<double> sample_label_process_fast(const std::vector<double>& e,
                                              Rng& rng);

SnakePath sample_snake(int m, Rng& rng);        // fast label sampler

struct IseSummary {
  EmpiricalMeasure measure;          // mass 1/m on Z_{t_0..t_{m-1}}
  EmpiricalMeasure shifted_measure;  // nonnegative shift of the above
  double sup;
  double inf;
  double width;  // sup - inf over the grid
};

IseSummary ise_summary(const SnakePath& path);

// CSV with columns t,e,Z
std::string write_snake_csv(const SnakePath& path);

}  // namespace randmaps

#endif
