#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "labelflow/graph.hpp"
#include "labelflow/labeling.hpp"
#include "labelflow/types.hpp"

namespace labelflow {

enum class Variant { classic, leung, clpa };
enum class Mode { asynchronous, synchronous };
enum class Anneal { linear, off };

std::string_view to_string(Variant v) noexcept;
std::string_view to_string(Mode m) noexcept;
std::string_view to_string(Anneal a) noexcept;

/// Throws ConfigError on unknown names.
Variant parse_variant(std::string_view name);
Mode parse_mode(std::string_view name);
Anneal parse_anneal(std::string_view name);

struct PropagationConfig {
  Variant variant = Variant::classic;
  Mode mode = Mode::asynchronous;
  /// T. Defaults to 5 * cycles for clpa and 100 otherwise.
  std::optional<std::uint32_t> max_iterations;
  /// k, clpa only.
  std::uint32_t cycles = 100;
  /// Hop attenuation per link, leung only.
  double delta = 0.1;
  /// Node preference exponent m applied to degree, leung only.
  double pref_exponent = 0.1;
  /// Tie-break randomization schedule, clpa only.
  Anneal anneal = Anneal::linear;
  std::uint64_t seed = 0;

  std::uint32_t resolved_max_iterations() const noexcept;

  /// Throws ConfigError, e.g. "k exceeds T".
  void validate() const;
};

struct IterationRecord {
  std::uint32_t iteration;
  std::size_t changes;
  std::size_t labels;
  std::size_t capacity;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct RunTrace {
  std::uint32_t iterations_used = 0;
  bool converged = false;
  std::vector<IterationRecord> per_iteration;

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

struct PropagationResult {
  Labeling labeling;
  RunTrace trace;
};

/// Community capacity at iteration t: ceil((floor(k*t/T) + 1) * N / k),
/// clamped to N. Throws ConfigError when k > T, k == 0 or t >= T.
std::size_t capacity(std::uint32_t t, std::uint32_t max_iterations, std::uint32_t cycles,
                     std::size_t node_count);

/// Linear schedule 1 - t/(T-1): 1 at t = 0, 0 at t = T-1. T == 1 yields 1.
double anneal_probability(std::uint32_t t, std::uint32_t max_iterations) noexcept;

/// Majority rule. On ties: with probability p pick uniformly among the
/// maximal labels; otherwise keep the current label when it is maximal and
/// pick uniformly among the maximal labels when it is not. Isolated nodes
/// keep their label.
Label update_label_classic(const Graph& g, const Labeling& lab, NodeId v, Rng& rng, double p);

struct LeungUpdate {
  Label label;
  double strength;
};

/// Node preference + hop attenuation: score(l) = sum over neighbors u holding
/// l of strength(u) * degree(u)^m. The winner's new strength is the largest
/// strength among its holders in N(v), minus delta, floored at 0. Ties follow
/// the classic rule with p = 0.
LeungUpdate update_label_leung(const Graph& g, const Labeling& lab, NodeId v, double delta,
                               double pref_exponent, Rng& rng);

/// Capacity-constrained majority: only neighbor labels with population below
/// `cap` are candidates, plus v's current label (members are never
/// expelled). Among candidates the classic rule applies with probability p.
Label update_label_clpa(const Graph& g, const Labeling& lab, NodeId v, std::size_t cap,
                        Rng& rng, double p);

/// Runs one propagation from unique labels. The returned labels are compacted
/// to 0..C-1 by first occurrence. Throws ConfigError for invalid configs.
PropagationResult run(const Graph& g, const PropagationConfig& cfg);

}  // namespace labelflow
