#include "labelflow/ground_truth.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "labelflow/errors.hpp"

namespace labelflow {

GroundTruth load_ground_truth(std::istream& in, const Graph& g) {
  constexpr Label unassigned = std::numeric_limits<Label>::max();
  GroundTruth gt;
  gt.labels.assign(g.node_count(), unassigned);
  std::vector<bool> repeated(g.node_count(), false);

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string token;
    bool any = false;
    while (fields >> token) {
      if (!any && token.starts_with('#')) break;
      ExternalId id = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": bad node id '" + token + "'");
      }
      any = true;
      auto v = g.internal_id(id);
      if (!v) {
        ++gt.unknown_ids;
        continue;
      }
      if (gt.labels[*v] == unassigned) {
        gt.labels[*v] = static_cast<Label>(gt.communities);
      } else if (gt.labels[*v] != gt.communities && !repeated[*v]) {
        repeated[*v] = true;
        ++gt.multi_assigned;
      }
    }
    if (any) ++gt.communities;
  }
  for (Label& l : gt.labels) {
    if (l == unassigned) {
      l = static_cast<Label>(gt.communities++);
      ++gt.unassigned;
    }
  }
  return gt;
}

GroundTruth load_ground_truth_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_ground_truth(in, g);
}

void write_ground_truth(std::ostream& out, const Graph& g, std::span<const Label> labels) {
  std::vector<Label> dense;
  const std::size_t c = compact_labels(labels, dense);
  std::vector<std::vector<NodeId>> members(c);
  for (NodeId v = 0; v < dense.size(); ++v) members[dense[v]].push_back(v);
  for (const auto& community : members) {
    for (std::size_t i = 0; i < community.size(); ++i) {
      out << (i ? " " : "") << g.external_id(community[i]);
    }
    out << '\n';
  }
}

}  // namespace labelflow
