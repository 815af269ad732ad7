#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "labelflow/benchgen.hpp"
#include "labelflow/diagnostics.hpp"
#include "labelflow/graph.hpp"
#include "labelflow/metrics.hpp"
#include "labelflow/propagation.hpp"

namespace labelflow {

/// CSV "external_node_id,community_id".
void write_labeling_csv(std::ostream& out, const Graph& g, std::span<const Label> labels);

/// Parses write_labeling_csv output back into per-internal-node labels.
/// Throws ParseError on malformed rows or unknown ids.
std::vector<Label> read_labeling_csv(std::istream& in, const Graph& g);

/// CSV "iteration,changes,labels,capacity".
void write_trace_csv(std::ostream& out, const RunTrace& trace);

/// CSV "rank,external_id,attraction_power", descending.
void write_attraction_csv(std::ostream& out, const Graph& g, const AttractionProfile& profile);

/// CSV "mu,seed,algorithm,nmi,modularity,communities,iterations,gt_dissatisfied".
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

/// CSV "mu,algorithm,runs,mean_nmi,mean_modularity,mean_communities,mean_iterations,mean_gt_dissatisfied".
void write_sweep_summary_csv(std::ostream& out, std::span<const SweepSummaryRow> rows);

nlohmann::json to_json(const CommunityReport& report);
nlohmann::json to_json(const FloodFillReport& report, const Graph& g);
nlohmann::json to_json(const PropagationConfig& cfg);
nlohmann::json to_json(const BenchmarkSpec& spec);

}  // namespace labelflow
