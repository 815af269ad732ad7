#include "labelflow/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "labelflow/errors.hpp"

namespace labelflow {

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::classic: return "classic";
    case Variant::leung: return "leung";
    case Variant::clpa: return "clpa";
  }
  return "?";
}

std::string_view to_string(Mode m) noexcept {
  return m == Mode::asynchronous ? "async" : "sync";
}

std::string_view to_string(Anneal a) noexcept { return a == Anneal::linear ? "linear" : "off"; }

Variant parse_variant(std::string_view name) {
  if (name == "classic" || name == "lpa") return Variant::classic;
  if (name == "leung") return Variant::leung;
  if (name == "clpa") return Variant::clpa;
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

Mode parse_mode(std::string_view name) {
  if (name == "async" || name == "asynchronous") return Mode::asynchronous;
  if (name == "sync" || name == "synchronous") return Mode::synchronous;
  throw ConfigError("unknown mode '" + std::string(name) + "'");
}

Anneal parse_anneal(std::string_view name) {
  if (name == "linear") return Anneal::linear;
  if (name == "off") return Anneal::off;
  throw ConfigError("unknown anneal schedule '" + std::string(name) + "'");
}

std::uint32_t PropagationConfig::resolved_max_iterations() const noexcept {
  if (max_iterations) return *max_iterations;
  return variant == Variant::clpa ? 5 * cycles : 100;
}

void PropagationConfig::validate() const {
  const auto T = resolved_max_iterations();
  if (T == 0) throw ConfigError("T must be positive");
  if (variant == Variant::clpa) {
    if (cycles == 0) throw ConfigError("k must be positive");
    if (cycles > T) throw ConfigError("k exceeds T");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) throw ConfigError("delta must lie in [0, 1]");
  if (!std::isfinite(pref_exponent)) throw ConfigError("preference exponent must be finite");
}

std::size_t capacity(std::uint32_t t, std::uint32_t max_iterations, std::uint32_t cycles,
                     std::size_t node_count) {
  if (cycles == 0) throw ConfigError("k must be positive");
  if (cycles > max_iterations) throw ConfigError("k exceeds T");
  if (t >= max_iterations) throw ConfigError("iteration index must be below T");
  if (node_count == 0) throw ConfigError("capacity needs a non-empty graph");
  const std::uint64_t step = std::uint64_t{cycles} * t / max_iterations + 1;
  // ceil(step * N / k) in integers.
  const std::uint64_t cap = (step * node_count + cycles - 1) / cycles;
  return static_cast<std::size_t>(std::min<std::uint64_t>(cap, node_count));
}

double anneal_probability(std::uint32_t t, std::uint32_t max_iterations) noexcept {
  if (max_iterations <= 1) return 1.0;
  const double span = static_cast<double>(max_iterations - 1);
  return std::clamp(1.0 - static_cast<double>(t) / span, 0.0, 1.0);
}

namespace {

struct Vote {
  Label label;
  double weight;
  double strength;
};

struct Tally {
  Label label;
  double score;
  double max_strength;
};

// Collects neighbor votes and merges them per label, ascending by label.
template <class WeightFn>
const std::vector<Tally>& tally_neighbors(const Graph& g, const Labeling& lab, NodeId v,
                                          WeightFn&& weight) {
  thread_local std::vector<Vote> votes;
  thread_local std::vector<Tally> tallies;
  votes.clear();
  tallies.clear();
  for (NodeId u : g.neighbors(v)) votes.push_back({lab.label(u), weight(u), lab.strength(u)});
  std::sort(votes.begin(), votes.end(),
            [](const Vote& a, const Vote& b) { return a.label < b.label; });
  for (const Vote& vote : votes) {
    if (!tallies.empty() && tallies.back().label == vote.label) {
      tallies.back().score += vote.weight;
      tallies.back().max_strength = std::max(tallies.back().max_strength, vote.strength);
    } else {
      tallies.push_back({vote.label, vote.weight, vote.strength});
    }
  }
  return tallies;
}

// Picks among maximal-score entries of `candidates`. With probability p the
// pick is uniform; otherwise the current label wins when it is maximal.
const Tally& choose(std::span<const Tally> candidates, Label current, Rng& rng, double p) {
  thread_local std::vector<std::size_t> best;
  best.clear();
  double top = -1.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double s = candidates[i].score;
    if (s > top) {
      top = s;
      best.clear();
      best.push_back(i);
    } else if (s == top) {
      best.push_back(i);
    }
  }
  if (best.size() == 1) return candidates[best.front()];

  bool randomize = p >= 1.0;
  if (p > 0.0 && p < 1.0) randomize = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
  if (!randomize) {
    for (std::size_t i : best) {
      if (candidates[i].label == current) return candidates[i];
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
  return candidates[best[pick(rng)]];
}

constexpr auto unit_weight = [](NodeId) { return 1.0; };

}  // namespace

Label update_label_classic(const Graph& g, const Labeling& lab, NodeId v, Rng& rng, double p) {
  if (g.neighbors(v).empty()) return lab.label(v);
  const auto& tallies = tally_neighbors(g, lab, v, unit_weight);
  return choose(tallies, lab.label(v), rng, p).label;
}

LeungUpdate update_label_leung(const Graph& g, const Labeling& lab, NodeId v, double delta,
                               double pref_exponent, Rng& rng) {
  if (g.neighbors(v).empty()) return {lab.label(v), lab.strength(v)};
  const auto& tallies = tally_neighbors(g, lab, v, [&](NodeId u) {
    return lab.strength(u) * std::pow(static_cast<double>(g.neighbors(u).size()), pref_exponent);
  });
  const Tally& winner = choose(tallies, lab.label(v), rng, 0.0);
  return {winner.label, std::max(0.0, winner.max_strength - delta)};
}

Label update_label_clpa(const Graph& g, const Labeling& lab, NodeId v, std::size_t cap,
                        Rng& rng, double p) {
  const Label current = lab.label(v);
  if (g.neighbors(v).empty()) return current;
  const auto& tallies = tally_neighbors(g, lab, v, unit_weight);

  thread_local std::vector<Tally> candidates;
  candidates.clear();
  bool has_current = false;
  for (const Tally& t : tallies) {
    if (t.label == current) {
      has_current = true;
      candidates.push_back(t);
    } else if (lab.population(t.label) < cap) {
      candidates.push_back(t);
    }
  }
  if (!has_current) candidates.push_back({current, 0.0, lab.strength(v)});
  return choose(candidates, current, rng, p).label;
}

namespace {

class Engine {
 public:
  Engine(const Graph& g, const PropagationConfig& cfg)
      : g_(g),
        cfg_(cfg),
        T_(cfg.resolved_max_iterations()),
        rng_(cfg.seed),
        lab_(Labeling::singletons(g.node_count())) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (!g.neighbors(v).empty()) active_.push_back(v);
    }
  }

  PropagationResult run() {
    const std::size_t n = g_.node_count();
    RunTrace trace;
    for (std::uint32_t t = 0; t < T_; ++t) {
      const bool constrained = cfg_.variant == Variant::clpa;
      cap_ = constrained ? capacity(t, T_, cfg_.cycles, n) : n;
      p_ = constrained && cfg_.anneal == Anneal::linear ? anneal_probability(t, T_) : 0.0;

      const std::size_t changes =
          cfg_.mode == Mode::asynchronous ? async_round() : sync_round();
      trace.per_iteration.push_back({t, changes, lab_.distinct_labels(), cap_});
      trace.iterations_used = t + 1;
      if (changes == 0 && cap_ >= n) {
        trace.converged = true;
        break;
      }
    }
    lab_.compact();
    return {std::move(lab_), std::move(trace)};
  }

 private:
  struct Decision {
    Label label;
    double strength;
  };

  Decision decide(const Labeling& state, NodeId v) {
    switch (cfg_.variant) {
      case Variant::classic:
        return {update_label_classic(g_, state, v, rng_, 0.0), state.strength(v)};
      case Variant::leung: {
        auto [label, strength] =
            update_label_leung(g_, state, v, cfg_.delta, cfg_.pref_exponent, rng_);
        return {label, strength};
      }
      case Variant::clpa:
        return {update_label_clpa(g_, state, v, cap_, rng_, p_), state.strength(v)};
    }
    return {state.label(v), state.strength(v)};
  }

  // Returns true if v changed label.
  bool apply(NodeId v, const Decision& d) {
    lab_.set_strength(v, d.strength);
    if (d.label == lab_.label(v)) return false;
    if (cfg_.variant == Variant::clpa && lab_.population(d.label) >= cap_) {
      throw InvariantViolation("label " + std::to_string(d.label) + " at capacity " +
                               std::to_string(cap_) + " gained node " + std::to_string(v));
    }
    lab_.assign(v, d.label);
#ifndef NDEBUG
    if (++assignments_ % 1000 == 0 && !lab_.populations_consistent()) {
      throw InvariantViolation("population counters drifted from labels");
    }
#endif
    return true;
  }

  std::size_t async_round() {
    std::shuffle(active_.begin(), active_.end(), rng_);
    std::size_t changes = 0;
    for (NodeId v : active_) changes += apply(v, decide(lab_, v));
    return changes;
  }

  std::size_t sync_round() {
    const Labeling snapshot = lab_;
    decisions_.clear();
    for (NodeId v : active_) decisions_.push_back(decide(snapshot, v));
    std::size_t changes = 0;
    for (std::size_t i = 0; i < active_.size(); ++i) {
      const NodeId v = active_[i];
      Decision d = decisions_[i];
      // Simultaneous moves can overfill a label; later movers stay put.
      if (cfg_.variant == Variant::clpa && d.label != lab_.label(v) &&
          lab_.population(d.label) >= cap_) {
        d.label = lab_.label(v);
      }
      changes += apply(v, d);
    }
    return changes;
  }

  const Graph& g_;
  const PropagationConfig& cfg_;
  const std::uint32_t T_;
  Rng rng_;
  Labeling lab_;
  std::vector<NodeId> active_;
  std::vector<Decision> decisions_;
  std::size_t cap_ = 0;
  double p_ = 0.0;
#ifndef NDEBUG
  std::size_t assignments_ = 0;
#endif
};

}  // namespace

PropagationResult run(const Graph& g, const PropagationConfig& cfg) {
  cfg.validate();
  if (g.node_count() == 0) return {Labeling{}, RunTrace{}};
  return Engine(g, cfg).run();
}

}  // namespace labelflow
