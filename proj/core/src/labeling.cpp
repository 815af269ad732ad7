#include "labelflow/labeling.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace labelflow {

Labeling Labeling::singletons(std::size_t node_count) {
  std::vector<Label> labels(node_count);
  for (std::size_t v = 0; v < node_count; ++v) labels[v] = static_cast<Label>(v);
  return Labeling(std::move(labels), node_count);
}

Labeling::Labeling(std::vector<Label> labels, std::size_t label_space)
    : labels_(std::move(labels)), population_(label_space, 0), strengths_(labels_.size(), 1.0) {
  for (Label l : labels_) {
    if (l >= label_space) throw std::invalid_argument("label outside label space");
    if (population_[l]++ == 0) ++live_labels_;
  }
}

void Labeling::set_strength(NodeId v, double s) { strengths_[v] = std::clamp(s, 0.0, 1.0); }

void Labeling::assign(NodeId v, Label l) {
  Label old = labels_[v];
  if (old == l) return;
  if (--population_[old] == 0) --live_labels_;
  if (population_[l]++ == 0) ++live_labels_;
  labels_[v] = l;
}

bool Labeling::populations_consistent() const {
  std::vector<std::size_t> recount(population_.size(), 0);
  for (Label l : labels_) ++recount[l];
  return recount == population_;
}

void Labeling::compact() {
  std::vector<Label> dense;
  std::size_t count = compact_labels(labels_, dense);
  *this = [&] {
    Labeling out(std::move(dense), count);
    out.strengths_ = std::move(strengths_);
    return out;
  }();
}

std::size_t compact_labels(std::span<const Label> labels, std::vector<Label>& dense) {
  Label max_label = 0;
  for (Label l : labels) max_label = std::max(max_label, l);
  dense.resize(labels.size());
  Label next = 0;

  // Sparse label values (e.g. read from a file) go through a hash map
  // instead of a rename table sized by the largest label.
  if (std::size_t{max_label} > 4 * labels.size() + 64) {
    std::unordered_map<Label, Label> rename;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      auto [it, inserted] = rename.try_emplace(labels[v], next);
      if (inserted) ++next;
      dense[v] = it->second;
    }
    return next;
  }

  constexpr Label unseen = std::numeric_limits<Label>::max();
  std::vector<Label> rename(labels.empty() ? 0 : std::size_t{max_label} + 1, unseen);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    Label& r = rename[labels[v]];
    if (r == unseen) r = next++;
    dense[v] = r;
  }
  return next;
}

}  // namespace labelflow
