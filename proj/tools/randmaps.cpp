// randmaps: samplers, verifiers, and Monte Carlo experiments for random
// plane quadrangulations, labeled trees, looptrees, and the Brownian snake.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "randmaps/cvs.hpp"
#include "randmaps/errors.hpp"
#include "randmaps/looptree.hpp"
#include "randmaps/map.hpp"
#include "randmaps/rng.hpp"
#include "randmaps/snake.hpp"
#include "randmaps/stats.hpp"
#include "randmaps/tree.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw randmaps::ResourceError("cannot open output file: " + path);
  out << content;
}

int cmd_sample_quad(int faces, std::uint64_t seed, const std::string& out_path) {
  std::cout << "randmaps " << kVersion << " seed=" << seed << "\n";
  randmaps::Rng rng = randmaps::derive_stream(seed);
  randmaps::LabeledTree lt = randmaps::sample_uniform_labeled_tree(faces, rng);
  int bit = std::uniform_int_distribution<int>(0, 1)(rng);
  randmaps::RootedMap q = randmaps::tree_to_quad(lt, bit);
  auto [lo, hi] = std::minmax_element(lt.label.begin(), lt.label.end());
  std::cout << "V=" << q.n_vertices() << " E=" << q.n_edges()
            << " F=" << randmaps::faces(q).size()
            << " radius=" << (*hi - *lo + 1) << "\n";
  if (!out_path.empty()) write_file(out_path, randmaps::write_map(q));
  return 0;
}

int cmd_verify(int max_edges) {
  std::cout << "randmaps " << kVersion << "\n";
  try {
    for (int n = 1; n <= max_edges; ++n) {
      randmaps::TwoToOneReport rep = randmaps::verify_two_to_one(n);
      std::cout << "n=" << n << " trees=" << rep.n_labeled_trees
                << " pointed_quads=" << rep.n_pointed_rooted_quads
                << " rooted_quads=" << rep.n_rooted_quads << " PASS\n";
    }
  } catch (const randmaps::BijectionViolation& e) {
    std::cerr << "FAIL: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_experiment(const std::string& config_path) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "config: cannot read " << config_path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  randmaps::ExperimentConfig cfg;
  try {
    cfg = randmaps::ExperimentConfig::from_json(buf.str());
  } catch (const randmaps::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::cout << "randmaps " << kVersion << " seed=" << cfg.seed << "\n";
  randmaps::ExperimentResult res = randmaps::run_experiment(cfg);
  write_file(cfg.output_path, res.csv);
  write_file(cfg.output_path + ".summary.json", res.summary_json);
  std::cout << "wrote " << cfg.output_path << " and "
            << cfg.output_path << ".summary.json\n";
  return 0;
}

int cmd_snake(int grid, int replicas, std::uint64_t seed,
              const std::string& out_path) {
  std::cout << "randmaps " << kVersion << " seed=" << seed << "\n";
  std::ostringstream csv;
  csv.precision(17);
  csv << "replica,width\n";
  for (int r = 0; r < replicas; ++r) {
    randmaps::Rng rng = randmaps::derive_stream(seed, r);
    csv << r << ',' << randmaps::ise_summary(randmaps::sample_snake(grid, rng)).width
        << '\n';
  }
  write_file(out_path, csv.str());
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_looptree(double alpha, const std::vector<int>& sizes, int replicas,
                 std::uint64_t seed, const std::string& out_path) {
  std::cout << "randmaps " << kVersion << " seed=" << seed << "\n";
  auto samples = randmaps::stable_scaling_samples(alpha, sizes, replicas, seed);
  std::ostringstream csv;
  csv.precision(17);
  csv << "n,replica,diameter,rescaled\n";
  for (const auto& s : samples)
    csv << s.n << ',' << s.replica << ',' << s.diameter << ',' << s.rescaled
        << '\n';
  write_file(out_path, csv.str());
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random plane maps toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  int faces = 0;
  std::uint64_t seed = 1;
  std::string out_path;
  auto* sq = app.add_subcommand("sample-quad",
                                "sample a uniform rooted pointed quadrangulation");
  sq->add_option("--faces", faces, "number of faces")
      ->required()
      ->check(CLI::PositiveNumber);
  sq->add_option("--seed", seed, "RNG seed");
  sq->add_option("--out", out_path, "output map file");

  int max_edges = 3;
  auto* ve = app.add_subcommand("verify", "exhaustive bijection census");
  ve->add_option("--max-edges", max_edges, "largest edge count, at most 4")
      ->check(CLI::Range(1, 4));

  std::string config_path;
  auto* ex = app.add_subcommand("experiment", "run a Monte Carlo experiment");
  ex->add_option("--config", config_path, "JSON config file")->required();

  int grid = 2000, replicas = 100;
  std::uint64_t snake_seed = 1;
  std::string snake_out = "snake.csv";
  auto* sn = app.add_subcommand("snake", "Brownian snake width samples");
  sn->add_option("--grid", grid, "grid size m")->check(CLI::Range(2, 1000000));
  sn->add_option("--replicas", replicas, "replica count")
      ->check(CLI::PositiveNumber);
  sn->add_option("--seed", snake_seed, "RNG seed");
  sn->add_option("--out", snake_out, "output CSV");

  double alpha = 1.5;
  std::vector<int> sizes;
  int lt_replicas = 100;
  std::uint64_t lt_seed = 1;
  std::string lt_out = "looptree.csv";
  auto* lt = app.add_subcommand("looptree", "stable looptree diameter samples");
  lt->add_option("--alpha", alpha, "stability parameter in (1,2)")
      ->check(CLI::Range(1.0, 2.0));
  lt->add_option("--sizes", sizes, "conditioned tree sizes")->required();
  lt->add_option("--replicas", lt_replicas, "replica count")
      ->check(CLI::PositiveNumber);
  lt->add_option("--seed", lt_seed, "RNG seed");
  lt->add_option("--out", lt_out, "output CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // 0
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);  // 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sq->parsed()) return cmd_sample_quad(faces, seed, out_path);
    if (ve->parsed()) return cmd_verify(max_edges);
    if (ex->parsed()) return cmd_experiment(config_path);
    if (sn->parsed()) return cmd_snake(grid, replicas, snake_seed, snake_out);
    if (lt->parsed())
      return cmd_looptree(alpha, sizes, lt_replicas, lt_seed, lt_out);
  } catch (const randmaps::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
