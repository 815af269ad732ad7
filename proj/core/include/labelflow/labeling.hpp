#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "labelflow/types.hpp"

namespace labelflow {

/// Node -> label assignment with incrementally maintained label populations.
///
/// Labels live in [0, label_space). The per-node strength is only consulted
/// by the hop-attenuation variant and stays in [0, 1].
class Labeling {
 public:
  Labeling() = default;

  /// Every node holds its own id as label; strengths start at 1.
  static Labeling singletons(std::size_t node_count);

  /// Throws std::invalid_argument if any label is >= label_space.
  Labeling(std::vector<Label> labels, std::size_t label_space);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t label_space() const noexcept { return population_.size(); }

  Label label(NodeId v) const noexcept { return labels_[v]; }
  std::span<const Label> labels() const noexcept { return labels_; }

  std::size_t population(Label l) const noexcept { return population_[l]; }
  std::size_t distinct_labels() const noexcept { return live_labels_; }

  double strength(NodeId v) const noexcept { return strengths_[v]; }
  void set_strength(NodeId v, double s);

  /// Moves v to `l`, keeping populations in sync.
  void assign(NodeId v, Label l);

  /// Recounts populations from scratch and compares with the counters.
  bool populations_consistent() const;

  /// Renames labels to 0..C-1 in order of first occurrence by node id.
  void compact();

 private:
  std::vector<Label> labels_;
  std::vector<std::size_t> population_;
  std::vector<double> strengths_;
  std::size_t live_labels_ = 0;
};

/// Dense relabeling by first occurrence; returns the community count.
std::size_t compact_labels(std::span<const Label> labels, std::vector<Label>& dense);

}  // namespace labelflow
