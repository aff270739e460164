#include "randmaps/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include "randmaps/cvs.hpp"
#include "randmaps/errors.hpp"
#include "randmaps/looptree.hpp"
#include "randmaps/rng.hpp"
#include "randmaps/snake.hpp"
#include "randmaps/tree.hpp"

#include "json.hpp"

namespace randmaps {

EmpiricalMeasure EmpiricalMeasure::create(std::vector<double> atoms,
                                          std::vector<double> masses) {
  if (atoms.size() != masses.size() || atoms.empty())
    throw ValidationError("measure: atoms/masses size mismatch");
  std::vector<std::size_t> idx(atoms.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
  EmpiricalMeasure m;
  double total = 0.0;
  for (std::size_t i : idx) {
    if (masses[i] <= 0.0) throw ValidationError("measure: nonpositive mass");
    total += masses[i];
    if (!m.atoms.empty() && m.atoms.back() == atoms[i])
      m.masses.back() += masses[i];  // merge equal atoms
    else {
      m.atoms.push_back(atoms[i]);
      m.masses.push_back(masses[i]);
    }
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw ValidationError("measure: masses do not sum to 1");
  return m;
}

EmpiricalMeasure EmpiricalMeasure::from_samples(std::vector<double> samples) {
  const double w = 1.0 / static_cast<double>(samples.size());
  std::vector<double> masses(samples.size(), w);
  // compensate float dust so the invariant check stays exact enough
  double total = w * static_cast<double>(samples.size());
  masses.back() += 1.0 - total;
  return create(std::move(samples), std::move(masses));
}

double EmpiricalMeasure::cdf(double x) const {
  double f = 0.0;
  for (std::size_t i = 0; i < atoms.size() && atoms[i] <= x; ++i) f += masses[i];
  return f;
}

std::string EmpiricalMeasure::write_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "atom,mass\n";
  for (std::size_t i = 0; i < atoms.size(); ++i)
    out << atoms[i] << ',' << masses[i] << '\n';
  return out.str();
}

EmpiricalMeasure rescale_profile(const DistanceProfile& p, double a) {
  if (p.values.empty()) throw ValidationError("rescale_profile: empty profile");
  if (a <= 0.0) throw ValidationError("rescale_profile: a must be positive");
  const double n = static_cast<double>(p.values.size());
  const double denom = std::pow(a * n, 0.25);
  std::vector<double> atoms;
  atoms.reserve(p.values.size());
  for (int x : p.values) atoms.push_back(static_cast<double>(x) / denom);
  return EmpiricalMeasure::from_samples(std::move(atoms));
}

double ks_distance(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu) {
  // sweep the merged atom sequence tracking both cumulative functions
  double d = 0.0, fm = 0.0, fn = 0.0;
  std::size_t i = 0, j = 0;
  while (i < mu.atoms.size() || j < nu.atoms.size()) {
    double x;
    if (j >= nu.atoms.size() || (i < mu.atoms.size() && mu.atoms[i] <= nu.atoms[j]))
      x = mu.atoms[i];
    else
      x = nu.atoms[j];
    while (i < mu.atoms.size() && mu.atoms[i] == x) fm += mu.masses[i++];
    while (j < nu.atoms.size() && nu.atoms[j] == x) fn += nu.masses[j++];
    d = std::max(d, std::abs(fm - fn));
  }
  return std::min(d, 1.0);
}

EmpiricalMeasure shift_nonnegative(const EmpiricalMeasure& mu) {
  EmpiricalMeasure out = mu;
  const double lo = mu.inf();
  for (double& x : out.atoms) x -= lo;
  return out;
}

double width(const EmpiricalMeasure& mu) { return mu.sup() - mu.inf(); }

EmpiricalMeasure mean_measure(const std::vector<EmpiricalMeasure>& ms) {
  if (ms.empty()) throw ValidationError("mean_measure: empty list");
  std::vector<double> atoms, masses;
  const double w = 1.0 / static_cast<double>(ms.size());
  for (const auto& m : ms)
    for (std::size_t i = 0; i < m.atoms.size(); ++i) {
      atoms.push_back(m.atoms[i]);
      masses.push_back(w * m.masses[i]);
    }
  double total = std::accumulate(masses.begin(), masses.end(), 0.0);
  masses.back() += 1.0 - total;
  return EmpiricalMeasure::create(std::move(atoms), std::move(masses));
}

// --- experiment harness ------------------------------------------------------

namespace {

using nlohmann::json;

int thread_budget() {
  if (const char* env = std::getenv("RANDMAPS_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// deterministic parallel-for over replicas: results keyed by index
template <typename F>
void for_each_replica(int count, F&& body) {
  const int threads = std::min(thread_budget(), count);
  if (threads <= 1) {
    for (int r = 0; r < count; ++r) body(r);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int r = t; r < count; r += threads) body(r);
    });
  for (auto& th : pool) th.join();
}

const char* kind_name(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Profile: return "profile";
    case ExperimentKind::Radius: return "radius";
    case ExperimentKind::Looptree: return "looptree";
    case ExperimentKind::Snake: return "snake";
  }
  return "?";
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config: invalid JSON: ") + e.what());
  }
  auto fail = [](const std::string& ptr, const std::string& what) {
    throw ValidationError("config " + ptr + ": " + what);
  };
  ExperimentConfig cfg;
  if (!j.is_object()) fail("/", "expected an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    fail("/kind", "expected a string (profile|radius|looptree|snake)");
  const std::string kind = j["kind"];
  if (kind == "profile") cfg.kind = ExperimentKind::Profile;
  else if (kind == "radius") cfg.kind = ExperimentKind::Radius;
  else if (kind == "looptree") cfg.kind = ExperimentKind::Looptree;
  else if (kind == "snake") cfg.kind = ExperimentKind::Snake;
  else fail("/kind", "unknown kind '" + kind + "'");
  if (!j.contains("sizes") || !j["sizes"].is_array() || j["sizes"].empty())
    fail("/sizes", "expected a nonempty array of integers");
  for (std::size_t i = 0; i < j["sizes"].size(); ++i) {
    const auto& s = j["sizes"][i];
    if (!s.is_number_integer() || s.get<long long>() < 1)
      fail("/sizes/" + std::to_string(i), "expected an integer >= 1");
    cfg.sizes.push_back(s.get<int>());
  }
  if (!j.contains("replicas") || !j["replicas"].is_number_integer() ||
      j["replicas"].get<long long>() < 1)
    fail("/replicas", "expected an integer >= 1");
  cfg.replicas = j["replicas"].get<int>();
  if (!j.contains("seed") || !j["seed"].is_number_integer())
    fail("/seed", "expected an integer");
  cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("rescale_a")) {
    if (!j["rescale_a"].is_number() || j["rescale_a"].get<double>() <= 0.0)
      fail("/rescale_a", "expected a positive number");
    cfg.rescale_a = j["rescale_a"].get<double>();
  }
  if (j.contains("alpha")) {
    if (!j["alpha"].is_number()) fail("/alpha", "expected a number");
    cfg.alpha = j["alpha"].get<double>();
    if (cfg.kind == ExperimentKind::Looptree && !(cfg.alpha > 1.0 && cfg.alpha < 2.0))
      fail("/alpha", "expected a number in (1,2)");
  }
  if (j.contains("snake_grid")) {
    if (!j["snake_grid"].is_number_integer() || j["snake_grid"].get<long long>() < 0)
      fail("/snake_grid", "expected an integer >= 0");
    cfg.snake_grid = j["snake_grid"].get<int>();
  }
  if (j.contains("snake_replicas")) {
    if (!j["snake_replicas"].is_number_integer() ||
        j["snake_replicas"].get<long long>() < 0)
      fail("/snake_replicas", "expected an integer >= 0");
    cfg.snake_replicas = j["snake_replicas"].get<int>();
  }
  if (j.contains("output")) {
    if (!j["output"].is_string()) fail("/output", "expected a string");
    cfg.output_path = j["output"].get<std::string>();
  }
  return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.sizes.empty() || cfg.replicas < 1)
    throw ValidationError("experiment: sizes and replicas must be >= 1");
  const int R = cfg.replicas;
  const std::size_t S = cfg.sizes.size();

  // per (size, replica) scalar statistic, plus per-replica measures for the
  // profile kind
  std::vector<std::vector<double>> stat(S, std::vector<double>(R));
  std::vector<std::vector<EmpiricalMeasure>> measures;
  std::string stat_name;

  switch (cfg.kind) {
    case ExperimentKind::Radius: {
      stat_name = "radius_rescaled";
      for (std::size_t s = 0; s < S; ++s) {
        const int n = cfg.sizes[s];
        const double scale = std::pow(9.0 / (8.0 * n), 0.25);
        for_each_replica(R, [&, s, n, scale](int r) {
          Rng rng = derive_stream(cfg.seed, s, r);
          LabeledTree lt = sample_uniform_labeled_tree(n, rng);
          auto [lo, hi] =
              std::minmax_element(lt.label.begin(), lt.label.end());
          // label identity: max distance to the pointed vertex
          stat[s][r] = scale * (*hi - *lo + 1);
        });
      }
      break;
    }
    case ExperimentKind::Profile: {
      stat_name = "profile_sup";
      measures.resize(S, std::vector<EmpiricalMeasure>(R));
      for (std::size_t s = 0; s < S; ++s) {
        const int n = cfg.sizes[s];
        for_each_replica(R, [&, s, n](int r) {
          Rng rng = derive_stream(cfg.seed, s, r);
          LabeledTree lt = sample_uniform_labeled_tree(n, rng);
          RootedMap q = tree_to_quad(lt, std::uniform_int_distribution<int>(0, 1)(rng));
          auto mu = shift_nonnegative(
              rescale_profile(distance_profile(q, ProfileKind::Vertex), cfg.rescale_a));
          stat[s][r] = mu.sup();
          measures[s][r] = std::move(mu);
        });
      }
      break;
    }
    case ExperimentKind::Looptree: {
      stat_name = "diameter_rescaled";
      auto heavy = heavy_tail_offspring(cfg.alpha, 10000);
      for (std::size_t s = 0; s < S; ++s) {
        const int n = cfg.sizes[s];
        const double scale = std::pow(static_cast<double>(n), -1.0 / cfg.alpha);
        for_each_replica(R, [&, s, n, scale](int r) {
          Rng rng = derive_stream(cfg.seed, s, r);
          PlaneTree tau = sample_gw_conditioned(heavy.dist, n, rng, 100000000LL);
          stat[s][r] = scale * loop_diameter(build_looptree(tau));
        });
      }
      break;
    }
    case ExperimentKind::Snake: {
      stat_name = "width";
      for (std::size_t s = 0; s < S; ++s) {
        const int m = cfg.sizes[s];
        for_each_replica(R, [&, s, m](int r) {
          Rng rng = derive_stream(cfg.seed, s, r);
          SnakePath p = sample_snake(m, rng);
          stat[s][r] = ise_summary(p).width;
        });
      }
      break;
    }
  }

  // CSV, deterministic order
  std::ostringstream csv;
  csv.precision(17);
  csv << "kind,n,replica,statistic,value\n";
  for (std::size_t s = 0; s < S; ++s)
    for (int r = 0; r < R; ++r)
      csv << kind_name(cfg.kind) << ',' << cfg.sizes[s] << ',' << r << ','
          << stat_name << ',' << stat[s][r] << '\n';

  // summary: pairwise KS across sizes, oracle comparison where applicable
  json summary;
  summary["kind"] = kind_name(cfg.kind);
  summary["sizes"] = cfg.sizes;
  summary["replicas"] = R;
  summary["seed"] = cfg.seed;
  summary["statistic"] = stat_name;

  std::vector<EmpiricalMeasure> stat_measures;
  for (std::size_t s = 0; s < S; ++s)
    stat_measures.push_back(EmpiricalMeasure::from_samples(stat[s]));
  json ks = json::array();
  for (std::size_t a = 0; a < S; ++a)
    for (std::size_t b = a + 1; b < S; ++b)
      ks.push_back({{"n_a", cfg.sizes[a]},
                    {"n_b", cfg.sizes[b]},
                    {"ks", ks_distance(stat_measures[a], stat_measures[b])}});
  summary["pairwise_ks"] = ks;

  ExperimentResult result;
  if (cfg.kind == ExperimentKind::Profile) {
    // the mean measure across replicas, per size, plus their pairwise KS
    for (std::size_t s = 0; s < S; ++s)
      result.mean_measures.push_back(mean_measure(measures[s]));
    json mks = json::array();
    for (std::size_t a = 0; a < S; ++a)
      for (std::size_t b = a + 1; b < S; ++b)
        mks.push_back(
            {{"n_a", cfg.sizes[a]},
             {"n_b", cfg.sizes[b]},
             {"ks", ks_distance(result.mean_measures[a], result.mean_measures[b])}});
    summary["mean_measure_ks"] = mks;
  }
  if (cfg.kind == ExperimentKind::Radius && cfg.snake_grid > 0) {
    const int OR = cfg.snake_replicas > 0 ? cfg.snake_replicas : R;
    std::vector<double> widths(OR);
    for_each_replica(OR, [&](int r) {
      Rng rng = derive_stream(cfg.seed, 0xbeef, r);
      widths[r] = ise_summary(sample_snake(cfg.snake_grid, rng)).width;
    });
    auto oracle = EmpiricalMeasure::from_samples(std::move(widths));
    json vs = json::array();
    for (std::size_t s = 0; s < S; ++s)
      vs.push_back({{"n", cfg.sizes[s]},
                    {"snake_grid", cfg.snake_grid},
                    {"ks", ks_distance(stat_measures[s], oracle)}});
    summary["snake_oracle_ks"] = vs;
  }

  result.csv = csv.str();
  result.summary_json = summary.dump(2) + "\n";
  return result;
}

}  // namespace randmaps
