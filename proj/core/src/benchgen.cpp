#include "labelflow/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "labelflow/errors.hpp"

namespace labelflow {

void BenchmarkSpec::validate() const {
  if (node_count < 2) throw ConfigError("node count must be at least 2");
  if (!(mean_degree > 0.0)) throw ConfigError("mean degree must be positive");
  if (max_degree == 0) throw ConfigError("max degree must be positive");
  if (mean_degree > static_cast<double>(max_degree)) {
    throw ConfigError("mean degree exceeds max degree");
  }
  if (max_degree >= node_count) throw ConfigError("max degree must be below node count");
  if (!(mu >= 0.0 && mu < 1.0)) throw ConfigError("mu must lie in [0, 1)");
  if (community_min < 2) throw ConfigError("minimum community size must be at least 2");
  if (community_min > community_max) {
    throw ConfigError("minimum community size exceeds maximum");
  }
  if (community_min > node_count) {
    throw ConfigError("minimum community size exceeds node count");
  }
  if (!(degree_exponent > 0.0) || !std::isfinite(degree_exponent)) {
    throw ConfigError("degree exponent must be positive");
  }
}

namespace {

// Integral of x^s over [a, b].
double power_integral(double a, double b, double s) {
  if (std::abs(s + 1.0) < 1e-12) return std::log(b / a);
  return (std::pow(b, s + 1.0) - std::pow(a, s + 1.0)) / (s + 1.0);
}

double power_law_mean(double lo, double hi, double tau) {
  return power_integral(lo, hi, 1.0 - tau) / power_integral(lo, hi, -tau);
}

// Lower cutoff that gives the truncated power law the requested mean.
double solve_min_degree(double mean, double hi, double tau) {
  double lo = 1.0, up = hi;
  if (power_law_mean(lo, hi, tau) >= mean) return lo;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + up);
    (power_law_mean(mid, hi, tau) < mean ? lo : up) = mid;
  }
  return 0.5 * (lo + up);
}

std::vector<std::size_t> degree_sequence(const BenchmarkSpec& spec, Rng& rng) {
  const double hi = static_cast<double>(spec.max_degree);
  const double tau = spec.degree_exponent;
  const double lo = solve_min_degree(spec.mean_degree, hi, tau);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::size_t> degrees(spec.node_count);
  std::size_t total = 0;
  for (auto& d : degrees) {
    const double u = unit(rng);
    double x;
    if (std::abs(tau - 1.0) < 1e-12) {
      x = lo * std::pow(hi / lo, u);
    } else {
      const double e = 1.0 - tau;
      x = std::pow(std::pow(lo, e) + u * (std::pow(hi, e) - std::pow(lo, e)), 1.0 / e);
    }
    d = std::clamp<std::size_t>(static_cast<std::size_t>(std::lround(x)), 1, spec.max_degree);
    total += d;
  }

  // Nudge single degrees until the sum hits the target mean exactly.
  const auto target = static_cast<std::size_t>(
      std::llround(spec.mean_degree * static_cast<double>(spec.node_count)));
  std::uniform_int_distribution<std::size_t> any(0, spec.node_count - 1);
  while (total < target) {
    auto& d = degrees[any(rng)];
    if (d < spec.max_degree) ++d, ++total;
  }
  while (total > target) {
    auto& d = degrees[any(rng)];
    if (d > 1) --d, --total;
  }
  return degrees;
}

std::vector<std::size_t> community_sizes(const BenchmarkSpec& spec, Rng& rng) {
  const std::size_t cmax = std::min(spec.community_max, spec.node_count);
  std::uniform_int_distribution<std::size_t> draw(spec.community_min, cmax);
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  while (total < spec.node_count) {
    const std::size_t s = draw(rng);
    if (total + s <= spec.node_count) {
      sizes.push_back(s);
      total += s;
      continue;
    }
    std::size_t rest = spec.node_count - total;
    if (rest >= spec.community_min) {
      sizes.push_back(rest);
      break;
    }
    // Too small for a community of its own: spread over communities with room.
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (sizes[i] < cmax) open.push_back(i);
    }
    while (rest > 0 && !open.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
      const std::size_t slot = pick(rng);
      if (++sizes[open[slot]] == cmax) {
        open[slot] = open.back();
        open.pop_back();
      }
      --rest;
    }
    if (rest > 0) {
      throw ConfigError("community sizes in [" + std::to_string(spec.community_min) + ", " +
                        std::to_string(cmax) + "] cannot tile " +
                        std::to_string(spec.node_count) + " nodes");
    }
    break;
  }
  return sizes;
}

std::uint64_t edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

// Configuration-model matching of one stub pool into simple edges.
class StubWiring {
 public:
  StubWiring(std::unordered_set<std::uint64_t>& existing, std::vector<Edge>& out,
             const std::vector<Label>& community, bool cross_community, Rng& rng)
      : existing_(existing),
        out_(out),
        community_(community),
        cross_(cross_community),
        rng_(rng) {}

  /// Returns the number of stubs that could not be wired.
  std::size_t wire(std::vector<NodeId> stubs) {
    std::vector<Edge> pool;
    std::size_t dropped = 0;
    if (stubs.size() % 2 == 1) {
      std::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
      const std::size_t i = pick(rng_);
      stubs[i] = stubs.back();
      stubs.pop_back();
      ++dropped;
    }

    constexpr int kRematchRounds = 20;
    for (int round = 0; round < kRematchRounds && stubs.size() >= 2; ++round) {
      std::shuffle(stubs.begin(), stubs.end(), rng_);
      std::vector<NodeId> rejected;
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        if (admissible(stubs[i], stubs[i + 1])) {
          add(pool, stubs[i], stubs[i + 1]);
        } else {
          rejected.push_back(stubs[i]);
          rejected.push_back(stubs[i + 1]);
        }
      }
      stubs = std::move(rejected);
    }

    // Remaining pairs: rewire through a random existing edge (c, d) into
    // (a, c) + (b, d), which preserves every degree.
    constexpr int kSwapAttempts = 200;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const NodeId a = stubs[i];
      const NodeId b = stubs[i + 1];
      bool placed = false;
      for (int attempt = 0; attempt < kSwapAttempts && !pool.empty() && !placed; ++attempt) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        const std::size_t idx = pick(rng_);
        NodeId c = pool[idx].u, d = pool[idx].v;
        if (std::uniform_int_distribution<int>(0, 1)(rng_)) std::swap(c, d);
        if (c == a || c == b || d == a || d == b) continue;
        if (!admissible(a, c) || !admissible(b, d)) continue;
        if (edge_key(a, c) == edge_key(b, d)) continue;
        existing_.erase(edge_key(c, d));
        existing_.insert(edge_key(a, c));
        existing_.insert(edge_key(b, d));
        pool[idx] = {a, c};
        pool.push_back({b, d});
        placed = true;
      }
      if (!placed) dropped += 2;
    }
    out_.insert(out_.end(), pool.begin(), pool.end());
    return dropped;
  }

 private:
  bool admissible(NodeId a, NodeId b) const {
    if (a == b) return false;
    if (cross_ == (community_[a] == community_[b])) return false;
    return !existing_.contains(edge_key(a, b));
  }

  void add(std::vector<Edge>& pool, NodeId a, NodeId b) {
    existing_.insert(edge_key(a, b));
    pool.push_back({a, b});
  }

  std::unordered_set<std::uint64_t>& existing_;
  std::vector<Edge>& out_;
  const std::vector<Label>& community_;
  bool cross_;
  Rng& rng_;
};

}  // namespace

PlantedGraph generate(const BenchmarkSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const std::size_t n = spec.node_count;

  const auto degrees = degree_sequence(spec, rng);
  const auto sizes = community_sizes(spec, rng);

  std::vector<std::size_t> external(n), internal(n);
  for (std::size_t v = 0; v < n; ++v) {
    external[v] = static_cast<std::size_t>(std::lround(spec.mu * static_cast<double>(degrees[v])));
    internal[v] = degrees[v] - external[v];
  }

  // Place nodes by descending internal degree into communities large enough
  // to hold their internal links, weighted by free slots.
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return internal[a] > internal[b]; });

  std::vector<std::size_t> free_slots = sizes;
  std::vector<Label> community(n, 0);
  std::size_t dropped = 0;
  std::vector<std::size_t> eligible;
  for (NodeId v : order) {
    eligible.clear();
    std::size_t weight = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      if (free_slots[c] > 0 && sizes[c] > internal[v]) {
        eligible.push_back(c);
        weight += free_slots[c];
      }
    }
    std::size_t chosen = sizes.size();
    if (!eligible.empty()) {
      std::size_t ticket = std::uniform_int_distribution<std::size_t>(0, weight - 1)(rng);
      for (std::size_t c : eligible) {
        if (ticket < free_slots[c]) {
          chosen = c;
          break;
        }
        ticket -= free_slots[c];
      }
    } else {
      for (std::size_t c = 0; c < sizes.size(); ++c) {
        if (free_slots[c] > 0 && (chosen == sizes.size() || sizes[c] > sizes[chosen])) chosen = c;
      }
      const std::size_t fit = sizes[chosen] - 1;
      dropped += internal[v] - fit;
      internal[v] = fit;
    }
    --free_slots[chosen];
    community[v] = static_cast<Label>(chosen);
  }

  std::vector<std::vector<NodeId>> internal_stubs(sizes.size());
  std::vector<NodeId> external_stubs;
  for (NodeId v = 0; v < n; ++v) {
    internal_stubs[community[v]].insert(internal_stubs[community[v]].end(), internal[v], v);
    external_stubs.insert(external_stubs.end(), external[v], v);
  }

  std::unordered_set<std::uint64_t> existing;
  std::vector<Edge> edges;
  StubWiring inside(existing, edges, community, false, rng);
  for (auto& stubs : internal_stubs) dropped += inside.wire(std::move(stubs));
  StubWiring across(existing, edges, community, true, rng);
  dropped += across.wire(std::move(external_stubs));

  PlantedGraph out;
  out.graph = Graph::from_edges(n, edges);
  out.ground_truth = Labeling(community, sizes.size());
  out.dropped_stubs = dropped;

  std::size_t crossing = 0;
  for (const Edge& e : out.graph.edges()) crossing += community[e.u] != community[e.v];
  const std::size_t m = out.graph.edge_count();
  out.realized_mu = m > 0 ? static_cast<double>(crossing) / static_cast<double>(m) : 0.0;
  out.realized_mean_degree = 2.0 * static_cast<double>(m) / static_cast<double>(n);
  return out;
}

}  // namespace labelflow
