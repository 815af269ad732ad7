#include "labelflow/diagnostics.hpp"

#include <algorithm>
#include <numeric>

namespace labelflow {

std::string_view to_string(FloodRisk r) noexcept {
  switch (r) {
    case FloodRisk::low: return "low";
    case FloodRisk::elevated: return "elevated";
    case FloodRisk::high: return "high";
  }
  return "?";
}

AttractionProfile attraction_power(const Graph& g) {
  const std::size_t n = g.node_count();
  AttractionProfile profile;
  profile.values.assign(n, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    double sum = 0.0;
    for (NodeId v : g.neighbors(u)) sum += 1.0 / static_cast<double>(g.neighbors(v).size());
    profile.values[u] = sum;
  }

  if (n > 0) {
    const double mean =
        std::accumulate(profile.values.begin(), profile.values.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (double a : profile.values) ss += (a - mean) * (a - mean);
    profile.variance = ss / static_cast<double>(n);
  }

  profile.sorted_descending.resize(n);
  std::iota(profile.sorted_descending.begin(), profile.sorted_descending.end(), NodeId{0});
  std::stable_sort(profile.sorted_descending.begin(), profile.sorted_descending.end(),
                   [&](NodeId a, NodeId b) { return profile.values[a] > profile.values[b]; });
  return profile;
}

FloodFillReport flood_fill_report(const Graph& g, const RiskThresholds& thresholds) {
  const std::size_t n = g.node_count();
  const AttractionProfile profile = attraction_power(g);

  FloodFillReport report;
  report.variance = profile.variance;
  for (std::size_t i = 0; i < std::min<std::size_t>(10, n); ++i) {
    const NodeId v = profile.sorted_descending[i];
    report.top.push_back({v, profile.values[v]});
  }
  const double hub_degree = thresholds.hub_fraction * static_cast<double>(n);
  for (NodeId v = 0; v < n; ++v) {
    if (static_cast<double>(g.neighbors(v).size()) > hub_degree) ++report.hub_count;
  }
  if (n > 0) report.hub_fraction = static_cast<double>(report.hub_count) / static_cast<double>(n);
  if (n > 1) {
    report.max_reach = static_cast<double>(g.max_degree()) / static_cast<double>(n - 1);
  }

  if (report.variance > thresholds.variance_warn) {
    report.risk = report.hub_count > 0 ? FloodRisk::high : FloodRisk::elevated;
  }
  return report;
}

}  // namespace labelflow
