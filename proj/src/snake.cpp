#include "randmaps/snake.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "randmaps/errors.hpp"

namespace randmaps {

std::vector<double> sample_excursion(int m, Rng& rng) {
  if (m < 2) throw ValidationError("sample_excursion requires grid size >= 2");
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double step = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<double> bridge(m + 1, 0.0);
  for (int i = 1; i <= m; ++i) bridge[i] = bridge[i - 1] + step * gauss(rng);
  const double drift = bridge[m] / m;
  for (int i = 1; i <= m; ++i) bridge[i] -= drift * i;  // pin the endpoint

  int argmin = 0;
  for (int i = 1; i < m; ++i)
    if (bridge[i] < bridge[argmin]) argmin = i;  // earliest argmin

  // Vervaat rotation: start the cycle at the minimum
  std::vector<double> e(m + 1);
  const double low = bridge[argmin];
  for (int i = 0; i <= m; ++i) e[i] = bridge[(argmin + i) % m] - low;
  e[m] = 0.0;
  return e;
}

SnakeKernel::SnakeKernel(const std::vector<double>& e) : e_(e) {
  m_ = static_cast<int>(e.size()) - 1;
  if (m_ < 1) throw ValidationError("snake kernel: excursion too short");
  for (int i = 0; i <= m_; ++i) {
    if (e[i] < 0.0) throw ValidationError("snake kernel: negative excursion value");
    if (e[i] > 0.0) active_.push_back(i);
  }
  const int n = static_cast<int>(active_.size());
  // K restricted to the strictly positive grid points
  std::vector<double> K(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    double running = e[active_[a]];
    K[a * n + a] = running;
    for (int b = a + 1; b < n; ++b) {
      for (int i = active_[b - 1] + 1; i <= active_[b]; ++i)
        running = std::min(running, e[i]);
      K[a * n + b] = K[b * n + a] = running;
    }
  }
  // in-place Cholesky with escalating diagonal jitter
  for (double jitter : {1e-12, 1e-11, 1e-10}) {
    chol_ = K;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j <= i; ++j) {
        double s = chol_[i * n + j];
        for (int k = 0; k < j; ++k) s -= chol_[i * n + k] * chol_[j * n + k];
        if (i == j) {
          s += jitter;
          if (s <= 0.0) {
            ok = false;
            break;
          }
          chol_[i * n + i] = std::sqrt(s);
        } else {
          chol_[i * n + j] = s / chol_[j * n + j];
        }
      }
    }
    if (ok) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) chol_[i * n + j] = 0.0;
      return;
    }
  }
  throw NumericalError("snake kernel: covariance not positive definite within jitter tolerance");
}

double SnakeKernel::covariance(int i, int j) const {
  const int lo = std::min(i, j), hi = std::max(i, j);
  double v = e_[lo];
  for (int k = lo + 1; k <= hi; ++k) v = std::min(v, e_[k]);
  return v;
}

std::vector<double> SnakeKernel::sample(Rng& rng) const {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = static_cast<int>(active_.size());
  std::vector<double> g(n);
  for (double& x : g) x = gauss(rng);
  std::vector<double> z(m_ + 1, 0.0);  // zero-excursion points stay 0
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = 0; k <= i; ++k) s += chol_[i * n + k] * g[k];
    z[active_[i]] = s;
  }
  return z;
}

std::vector<double> sample_label_process(const std::vector<double>& e, Rng& rng) {
  return SnakeKernel(e).sample(rng);
}

std::vector<double> sample_label_process_fast(const std::vector<double>& e,
                                              Rng& rng) {
  const int m = static_cast<int>(e.size()) - 1;
  if (m < 1) throw ValidationError("label process: excursion too short");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> z(m + 1);
  // lineage of the current grid point in the tree coded by e:
  // (height, value) pairs with strictly increasing heights, root (0,0)
  std::vector<std::pair<double, double>> lineage{{0.0, 0.0}};
  z[0] = 0.0;
  if (e[0] > 0.0) {
    z[0] = std::sqrt(e[0]) * gauss(rng);
    lineage.emplace_back(e[0], z[0]);
  }
  for (int i = 1; i <= m; ++i) {
    const double b = std::min(e[i - 1], e[i]);  // branch point height
    // value at height b along the lineage: pop above b, bridge if strictly
    // between two recorded heights
    std::pair<double, double> above = lineage.back();
    while (lineage.back().first > b) {
      above = lineage.back();
      lineage.pop_back();
    }
    double zb;
    auto [h_lo, z_lo] = lineage.back();
    if (h_lo == b) {
      zb = z_lo;
    } else {
      const double span = above.first - h_lo;
      const double frac = (b - h_lo) / span;
      const double mean = z_lo + frac * (above.second - z_lo);
      const double var = (b - h_lo) * (above.first - b) / span;
      zb = mean + std::sqrt(var) * gauss(rng);
      lineage.emplace_back(b, zb);
    }
    if (e[i] > b) {
      z[i] = zb + std::sqrt(e[i] - b) * gauss(rng);
      lineage.emplace_back(e[i], z[i]);
    } else {
      z[i] = zb;
    }
  }
  return z;
}

SnakePath sample_snake(int m, Rng& rng) {
  SnakePath p;
  p.e = sample_excursion(m, rng);
  p.z = sample_label_process_fast(p.e, rng);
  return p;
}

IseSummary ise_summary(const SnakePath& path) {
  const int m = path.grid_size();
  if (m < 1) throw ValidationError("ise_summary: empty path");
  std::vector<double> atoms(path.z.begin(), path.z.begin() + m);
  IseSummary s{EmpiricalMeasure::from_samples(std::move(atoms)),
               {},
               *std::max_element(path.z.begin(), path.z.end()),
               *std::min_element(path.z.begin(), path.z.end()),
               0.0};
  s.width = s.sup - s.inf;
  s.shifted_measure = shift_nonnegative(s.measure);
  return s;
}

std::string write_snake_csv(const SnakePath& path) {
  std::ostringstream out;
  out.precision(17);
  out << "t,e,Z\n";
  const int m = path.grid_size();
  for (int i = 0; i <= m; ++i)
    out << static_cast<double>(i) / m << ',' << path.e[i] << ',' << path.z[i]
        << '\n';
  return out.str();
}

}  // namespace randmaps
