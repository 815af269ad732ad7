#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "labelflow/graph.hpp"
#include "labelflow/labeling.hpp"
#include "labelflow/propagation.hpp"

namespace labelflow {

/// Parameters of one planted-partition benchmark graph.
///
/// Simplified LFR-style generator with power-law degrees and non-overlapping
/// communities whose sizes are uniform in [community_min, community_max].
struct BenchmarkSpec {
  std::size_t node_count = 1000;
  double mean_degree = 20.0;
  std::size_t max_degree = 100;
  /// Fraction of each node's links that leave its community.
  double mu = 0.1;
  std::size_t community_min = 20;
  std::size_t community_max = 100;
  /// Power-law exponent of the degree distribution.
  double degree_exponent = 2.5;
  std::uint64_t seed = 0;

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

struct PlantedGraph {
  Graph graph;
  Labeling ground_truth;
  /// Inter-community edges over all edges, measured on the final edge set.
  double realized_mu = 0.0;
  double realized_mean_degree = 0.0;
  /// Stubs that could not be wired into a simple graph.
  std::size_t dropped_stubs = 0;
};

inline constexpr const char* kGeneratorDescription =
    "planted partition, simplified LFR: power-law degrees, uniform community sizes, no overlap";

/// Deterministic in spec (seed included). Throws ConfigError for infeasible specs.
PlantedGraph generate(const BenchmarkSpec& spec);

struct NamedAlgorithm {
  std::string name;
  PropagationConfig config;
};

struct SweepRow {
  double mu;
  std::uint64_t seed;
  std::string algorithm;
  double nmi;
  double modularity;
  std::size_t communities;
  std::uint32_t iterations;
  std::size_t gt_dissatisfied;
};

struct SweepSummaryRow {
  double mu;
  std::string algorithm;
  std::size_t runs;
  double mean_nmi;
  double mean_modularity;
  double mean_communities;
  double mean_iterations;
  double mean_gt_dissatisfied;
};

struct SweepResult {
  /// Ordered by (mu, seed, algorithm) as given, independent of `jobs`.
  std::vector<SweepRow> rows;
  /// Ordered by (mu, algorithm).
  std::vector<SweepSummaryRow> summary;
};

struct SweepOptions {
  std::size_t seeds_per_point = 10;
  /// Worker threads; 0 selects std::thread::hardware_concurrency().
  std::size_t jobs = 1;
};

/// Generates, propagates and scores every (mu, seed, algorithm) cell against
/// the planted partition. Graph seeds are derived from
/// (base.seed, mu index, seed index), so all algorithms see the same graphs.
SweepResult sweep(const BenchmarkSpec& base, const std::vector<double>& mu_values,
                  const std::vector<NamedAlgorithm>& algorithms, const SweepOptions& options);

/// Seed of replicate `replicate` at mu index `mu_index`.
std::uint64_t sweep_graph_seed(std::uint64_t base_seed, std::size_t mu_index,
                               std::size_t replicate) noexcept;

}  // namespace labelflow
