#include "labelflow/io.hpp"

#include <charconv>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "labelflow/errors.hpp"

namespace labelflow {

namespace {

// Fixed precision keeps CSV output byte-stable across runs.
struct Num {
  double value;
};

std::ostream& operator<<(std::ostream& out, Num n) {
  auto flags = out.flags();
  auto precision = out.precision();
  out << std::setprecision(12) << n.value;
  out.flags(flags);
  out.precision(precision);
  return out;
}

}  // namespace

void write_labeling_csv(std::ostream& out, const Graph& g, std::span<const Label> labels) {
  out << "external_node_id,community_id\n";
  for (NodeId v = 0; v < labels.size(); ++v) out << g.external_id(v) << ',' << labels[v] << '\n';
}

std::vector<Label> read_labeling_csv(std::istream& in, const Graph& g) {
  constexpr Label missing = std::numeric_limits<Label>::max();
  std::vector<Label> labels(g.node_count(), missing);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line == "external_node_id,community_id") continue;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    ExternalId id = 0;
    Label label = 0;
    const char* end = line.data() + line.size();
    auto r1 = std::from_chars(line.data(), line.data() + std::min(comma, line.size()), id);
    auto r2 = comma == std::string::npos
                  ? std::from_chars_result{nullptr, std::errc::invalid_argument}
                  : std::from_chars(line.data() + comma + 1, end, label);
    if (r1.ec != std::errc() || r2.ec != std::errc() || r2.ptr != end ||
        r1.ptr != line.data() + comma) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'node,community'");
    }
    auto v = g.internal_id(id);
    if (!v) throw ParseError("line " + std::to_string(line_no) + ": unknown node " + std::to_string(id));
    labels[*v] = label;
  }
  for (Label l : labels) {
    if (l == missing) throw ParseError("labeling does not cover every node");
  }
  return labels;
}

void write_trace_csv(std::ostream& out, const RunTrace& trace) {
  out << "iteration,changes,labels,capacity\n";
  for (const auto& r : trace.per_iteration) {
    out << r.iteration << ',' << r.changes << ',' << r.labels << ',' << r.capacity << '\n';
  }
}

void write_attraction_csv(std::ostream& out, const Graph& g, const AttractionProfile& profile) {
  out << "rank,external_id,attraction_power\n";
  for (std::size_t i = 0; i < profile.sorted_descending.size(); ++i) {
    const NodeId v = profile.sorted_descending[i];
    out << i + 1 << ',' << g.external_id(v) << ',' << Num{profile.values[v]} << '\n';
  }
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "mu,seed,algorithm,nmi,modularity,communities,iterations,gt_dissatisfied\n";
  for (const auto& r : rows) {
    out << Num{r.mu} << ',' << r.seed << ',' << r.algorithm << ',' << Num{r.nmi} << ','
        << Num{r.modularity} << ',' << r.communities << ',' << r.iterations << ','
        << r.gt_dissatisfied << '\n';
  }
}

void write_sweep_summary_csv(std::ostream& out, std::span<const SweepSummaryRow> rows) {
  out << "mu,algorithm,runs,mean_nmi,mean_modularity,mean_communities,mean_iterations,"
         "mean_gt_dissatisfied\n";
  for (const auto& r : rows) {
    out << Num{r.mu} << ',' << r.algorithm << ',' << r.runs << ',' << Num{r.mean_nmi} << ','
        << Num{r.mean_modularity} << ',' << Num{r.mean_communities} << ','
        << Num{r.mean_iterations} << ',' << Num{r.mean_gt_dissatisfied} << '\n';
  }
}

nlohmann::json to_json(const CommunityReport& report) {
  return {
      {"community_count", report.community_count},
      {"sizes", report.sizes},
      {"modularity", report.modularity},
      {"dissatisfied_count", report.dissatisfied_count},
      {"strong_flags", report.strong_flags},
      {"weak_flags", report.weak_flags},
      {"objective_h", report.objective_h},
  };
}

nlohmann::json to_json(const FloodFillReport& report, const Graph& g) {
  nlohmann::json top = nlohmann::json::array();
  for (const auto& node : report.top) {
    top.push_back({{"external_id", g.external_id(node.node)}, {"attraction_power", node.attraction}});
  }
  return {
      {"variance", report.variance},
      {"top", std::move(top)},
      {"hub_count", report.hub_count},
      {"hub_fraction", report.hub_fraction},
      {"max_reach", report.max_reach},
      {"risk", std::string(to_string(report.risk))},
  };
}

nlohmann::json to_json(const PropagationConfig& cfg) {
  nlohmann::json j = {
      {"variant", std::string(to_string(cfg.variant))},
      {"mode", std::string(to_string(cfg.mode))},
      {"T", cfg.resolved_max_iterations()},
      {"seed", cfg.seed},
  };
  switch (cfg.variant) {
    case Variant::clpa:
      j["k"] = cfg.cycles;
      j["anneal"] = std::string(to_string(cfg.anneal));
      break;
    case Variant::leung:
      j["delta"] = cfg.delta;
      j["pref_exponent"] = cfg.pref_exponent;
      break;
    case Variant::classic:
      break;
  }
  return j;
}

nlohmann::json to_json(const BenchmarkSpec& spec) {
  return {
      {"N", spec.node_count},
      {"mean_degree", spec.mean_degree},
      {"max_degree", spec.max_degree},
      {"mu", spec.mu},
      {"community_size_range", {spec.community_min, spec.community_max}},
      {"degree_exponent", spec.degree_exponent},
      {"seed", spec.seed},
  };
}

}  // namespace labelflow
