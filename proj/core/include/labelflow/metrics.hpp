#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "labelflow/graph.hpp"
#include "labelflow/types.hpp"

namespace labelflow {

/// A partition is any per-node label vector; labels need not be dense.
using Partition = std::span<const Label>;

struct CommunityReport {
  std::size_t community_count = 0;
  /// Indexed by community in order of first occurrence.
  std::vector<std::size_t> sizes;
  double modularity = 0.0;
  std::size_t dissatisfied_count = 0;
  std::vector<bool> strong_flags;
  std::vector<bool> weak_flags;
  std::uint64_t objective_h = 0;
};

/// Newman modularity: sum over communities of m_c/M - (d_c/2M)^2.
/// Throws std::invalid_argument when the graph has no edges or sizes differ.
double modularity(const Graph& g, Partition part);

/// 2 I(A;B) / (H(A) + H(B)) with natural logs. Both entropies zero gives 1,
/// exactly one zero gives 0. Throws std::invalid_argument on size mismatch.
double nmi(Partition a, Partition b);

/// Nodes with strictly more neighbors in some other community than in their own.
std::size_t dissatisfied_count(const Graph& g, Partition part);

struct CommunityFlags {
  std::vector<bool> strong;
  std::vector<bool> weak;
};

/// Strong: every member has more links inside than outside.
/// Weak: summed over members, inside links exceed outside links.
CommunityFlags strong_weak_flags(const Graph& g, Partition part);

/// H = 2 * (number of intra-community edges).
std::uint64_t lpa_objective(const Graph& g, Partition part);

CommunityReport community_report(const Graph& g, Partition part);

}  // namespace labelflow
