#include "labelflow/benchgen.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "labelflow/errors.hpp"
#include "labelflow/metrics.hpp"

namespace labelflow {

std::uint64_t sweep_graph_seed(std::uint64_t base_seed, std::size_t mu_index,
                               std::size_t replicate) noexcept {
  return mix_seed(mix_seed(base_seed, mu_index), replicate);
}

SweepResult sweep(const BenchmarkSpec& base, const std::vector<double>& mu_values,
                  const std::vector<NamedAlgorithm>& algorithms, const SweepOptions& options) {
  if (mu_values.empty()) throw ConfigError("mu list is empty");
  if (algorithms.empty()) throw ConfigError("algorithm list is empty");
  if (options.seeds_per_point == 0) throw ConfigError("seeds per point must be positive");
  for (double mu : mu_values) {
    BenchmarkSpec probe = base;
    probe.mu = mu;
    probe.validate();
  }
  for (const auto& algo : algorithms) algo.config.validate();

  const std::size_t replicates = options.seeds_per_point;
  const std::size_t units = mu_values.size() * replicates;
  const std::size_t per_unit = algorithms.size();
  std::vector<SweepRow> rows(units * per_unit);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t unit = next++; unit < units; unit = next++) {
      try {
        const std::size_t mu_index = unit / replicates;
        const std::size_t replicate = unit % replicates;
        BenchmarkSpec spec = base;
        spec.mu = mu_values[mu_index];
        spec.seed = sweep_graph_seed(base.seed, mu_index, replicate);
        const PlantedGraph planted = generate(spec);
        const auto truth = planted.ground_truth.labels();
        const std::size_t gt_unhappy = dissatisfied_count(planted.graph, truth);

        for (std::size_t a = 0; a < per_unit; ++a) {
          PropagationConfig cfg = algorithms[a].config;
          cfg.seed = mix_seed(spec.seed ^ algorithms[a].config.seed, a);
          const PropagationResult result = run(planted.graph, cfg);
          const auto found = result.labeling.labels();
          rows[unit * per_unit + a] = SweepRow{
              spec.mu,
              spec.seed,
              algorithms[a].name,
              nmi(found, truth),
              planted.graph.edge_count() > 0 ? modularity(planted.graph, found) : 0.0,
              result.labeling.distinct_labels(),
              result.trace.iterations_used,
              gt_unhappy,
          };
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = units;
      }
    }
  };

  std::size_t jobs = options.jobs == 0 ? std::thread::hardware_concurrency() : options.jobs;
  jobs = std::clamp<std::size_t>(jobs, 1, units);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  result.rows = std::move(rows);
  for (std::size_t mi = 0; mi < mu_values.size(); ++mi) {
    for (std::size_t a = 0; a < per_unit; ++a) {
      SweepSummaryRow s{mu_values[mi], algorithms[a].name, replicates, 0, 0, 0, 0, 0};
      for (std::size_t r = 0; r < replicates; ++r) {
        const SweepRow& row = result.rows[(mi * replicates + r) * per_unit + a];
        s.mean_nmi += row.nmi;
        s.mean_modularity += row.modularity;
        s.mean_communities += static_cast<double>(row.communities);
        s.mean_iterations += row.iterations;
        s.mean_gt_dissatisfied += static_cast<double>(row.gt_dissatisfied);
      }
      const double k = static_cast<double>(replicates);
      s.mean_nmi /= k;
      s.mean_modularity /= k;
      s.mean_communities /= k;
      s.mean_iterations /= k;
      s.mean_gt_dissatisfied /= k;
      result.summary.push_back(std::move(s));
    }
  }
  return result;
}

}  // namespace labelflow
