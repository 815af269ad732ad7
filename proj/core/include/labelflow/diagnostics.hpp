#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "labelflow/graph.hpp"

namespace labelflow {

/// Attraction power: the expected number of nodes adopting node u's initial
/// label after one synchronous propagation round, sum over v in N(u) of 1/d_v.
struct AttractionProfile {
  std::vector<double> values;
  /// Population variance over all nodes.
  double variance = 0.0;
  /// Node ids by descending attraction; ties by ascending id.
  std::vector<NodeId> sorted_descending;
};

AttractionProfile attraction_power(const Graph& g);

enum class FloodRisk { low, elevated, high };
std::string_view to_string(FloodRisk r) noexcept;

struct RiskThresholds {
  double variance_warn = 5.0;
  /// A hub is a node adjacent to more than this fraction of the network.
  double hub_fraction = 0.1;
};

struct RankedNode {
  NodeId node;
  double attraction;
};

struct FloodFillReport {
  double variance = 0.0;
  std::vector<RankedNode> top;
  std::size_t hub_count = 0;
  /// hub_count / N.
  double hub_fraction = 0.0;
  /// Largest degree over N - 1.
  double max_reach = 0.0;
  FloodRisk risk = FloodRisk::low;
};

/// low: variance <= variance_warn. elevated: variance above the warn level
/// without hubs. high: variance above the warn level and at least one hub.
FloodFillReport flood_fill_report(const Graph& g, const RiskThresholds& thresholds = {});

}  // namespace labelflow
