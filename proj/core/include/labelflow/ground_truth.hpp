#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "labelflow/graph.hpp"
#include "labelflow/labeling.hpp"

namespace labelflow {

struct GroundTruth {
  /// One label per internal node id.
  std::vector<Label> labels;
  std::size_t communities = 0;
  /// Nodes listed in more than one community; the first listing wins.
  std::size_t multi_assigned = 0;
  /// Nodes absent from every community; each gets its own singleton label.
  std::size_t unassigned = 0;
  /// Ids in the file that are not nodes of the graph.
  std::size_t unknown_ids = 0;
};

/// One line per community, whitespace-separated external node ids.
/// Lines starting with '#' and blank lines are skipped.
GroundTruth load_ground_truth(std::istream& in, const Graph& g);
GroundTruth load_ground_truth_file(const std::string& path, const Graph& g);

/// Inverse of load_ground_truth: one line per community in label order.
void write_ground_truth(std::ostream& out, const Graph& g, std::span<const Label> labels);

}  // namespace labelflow
