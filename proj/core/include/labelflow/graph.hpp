#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "labelflow/types.hpp"

namespace labelflow {

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct BuildStats {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

/// Immutable simple undirected graph in CSR form.
///
/// Internal node ids are dense (0..N-1). Each node also carries the external
/// id it was loaded under; external ids are strictly increasing in internal id
/// order, so the remap is stable under re-serialization.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over `node_count` nodes. Self-loops and repeated edges
  /// (in either orientation) are dropped and counted in `stats`.
  /// `external_ids` must be empty (identity) or strictly increasing with
  /// `node_count` entries.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::vector<ExternalId> external_ids = {},
                          BuildStats* stats = nullptr);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  /// Throws std::out_of_range for v >= node_count().
  std::size_t degree(NodeId v) const;

  /// Sorted ascending. Unchecked.
  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  bool has_edge(NodeId u, NodeId v) const;

  std::size_t max_degree() const noexcept;

  ExternalId external_id(NodeId v) const { return external_ids_.at(v); }
  std::span<const ExternalId> external_ids() const noexcept { return external_ids_; }
  std::optional<NodeId> internal_id(ExternalId id) const;

  /// Every edge once, with u < v, in ascending (u, v) order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
  std::vector<ExternalId> external_ids_;
};

enum class IdBase { zero, one };

struct EdgeListOptions {
  /// Token separator; whitespace when unset.
  std::optional<char> delimiter;
  std::string comment_prefix = "#";
  IdBase id_base = IdBase::zero;
  /// When set, the node set is exactly 0..node_count-1 (after base
  /// adjustment) and isolated nodes are kept. Otherwise nodes are the union
  /// of endpoint ids.
  std::optional<std::size_t> node_count;
};

struct LoadStats {
  std::size_t lines = 0;
  std::size_t edges_read = 0;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

struct LoadedGraph {
  Graph graph;
  LoadStats stats;
};

/// Parses a whitespace- (or delimiter-) separated edge list.
/// Throws ParseError("line N: ...") on malformed lines and
/// ParseError("empty graph") when no edges survive.
LoadedGraph load_edge_list(std::istream& in, const EdgeListOptions& options = {});
LoadedGraph load_edge_list_file(const std::string& path, const EdgeListOptions& options = {});

/// Writes "u v" per edge using external ids.
void write_edge_list(std::ostream& out, const Graph& g);

/// CSV "external_id,internal_id".
void write_remap_csv(std::ostream& out, const Graph& g);

}  // namespace labelflow
