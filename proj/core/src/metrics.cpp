#include "labelflow/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <stdexcept>

#include "labelflow/labeling.hpp"

namespace labelflow {

namespace {

void require_cover(const Graph& g, Partition part) {
  if (part.size() != g.node_count()) {
    throw std::invalid_argument("partition covers " + std::to_string(part.size()) +
                                " nodes, graph has " + std::to_string(g.node_count()));
  }
}

double entropy(const std::vector<std::size_t>& sizes, double n) {
  double h = 0.0;
  for (std::size_t s : sizes) {
    if (s == 0) continue;
    const double q = static_cast<double>(s) / n;
    h -= q * std::log(q);
  }
  return h;
}

}  // namespace

double modularity(const Graph& g, Partition part) {
  require_cover(g, part);
  const std::size_t m = g.edge_count();
  if (m == 0) throw std::invalid_argument("modularity is undefined on a graph without edges");

  std::vector<Label> dense;
  const std::size_t c = compact_labels(part, dense);
  std::vector<std::size_t> internal(c, 0);
  std::vector<std::size_t> degree_sum(c, 0);
  for (const Edge& e : g.edges()) {
    if (dense[e.u] == dense[e.v]) ++internal[dense[e.u]];
  }
  for (NodeId v = 0; v < g.node_count(); ++v) degree_sum[dense[v]] += g.neighbors(v).size();

  const double M = static_cast<double>(m);
  double q = 0.0;
  for (std::size_t i = 0; i < c; ++i) {
    const double share = static_cast<double>(degree_sum[i]) / (2.0 * M);
    q += static_cast<double>(internal[i]) / M - share * share;
  }
  return q;
}

double nmi(Partition a, Partition b) {
  if (a.size() != b.size()) throw std::invalid_argument("partitions cover different node sets");
  if (a.empty()) return 1.0;

  std::vector<Label> da, db;
  const std::size_t ca = compact_labels(a, da);
  const std::size_t cb = compact_labels(b, db);
  std::vector<std::size_t> size_a(ca, 0), size_b(cb, 0);
  std::vector<std::uint64_t> cells(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) {
    ++size_a[da[v]];
    ++size_b[db[v]];
    cells[v] = (std::uint64_t{da[v]} << 32) | db[v];
  }
  std::sort(cells.begin(), cells.end());

  const double n = static_cast<double>(a.size());
  const double ha = entropy(size_a, n);
  const double hb = entropy(size_b, n);
  if (ha == 0.0 && hb == 0.0) return 1.0;
  if (ha == 0.0 || hb == 0.0) return 0.0;

  std::vector<double> terms;
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    const double nij = static_cast<double>(j - i);
    const double ai = static_cast<double>(size_a[cells[i] >> 32]);
    const double bj = static_cast<double>(size_b[cells[i] & 0xffffffffULL]);
    terms.push_back(nij / n * std::log(nij * n / (ai * bj)));
    i = j;
  }
  // Summing in value order makes the result exactly symmetric in (a, b).
  std::sort(terms.begin(), terms.end());
  const double mutual = std::accumulate(terms.begin(), terms.end(), 0.0);
  return std::clamp(2.0 * mutual / (ha + hb), 0.0, 1.0);
}

std::size_t dissatisfied_count(const Graph& g, Partition part) {
  require_cover(g, part);
  std::vector<Label> dense;
  const std::size_t c = compact_labels(part, dense);
  std::vector<std::size_t> links(c, 0);
  std::vector<Label> touched;
  std::size_t unhappy = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    touched.clear();
    for (NodeId u : g.neighbors(v)) {
      if (links[dense[u]]++ == 0) touched.push_back(dense[u]);
    }
    const std::size_t own = links[dense[v]];
    bool worse = false;
    for (Label l : touched) {
      if (l != dense[v] && links[l] > own) worse = true;
      links[l] = 0;
    }
    unhappy += worse;
  }
  return unhappy;
}

CommunityFlags strong_weak_flags(const Graph& g, Partition part) {
  require_cover(g, part);
  std::vector<Label> dense;
  const std::size_t c = compact_labels(part, dense);
  CommunityFlags flags{std::vector<bool>(c, true), std::vector<bool>(c, false)};
  std::vector<std::size_t> sum_in(c, 0), sum_out(c, 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    std::size_t in = 0;
    for (NodeId u : g.neighbors(v)) in += dense[u] == dense[v];
    const std::size_t out = g.neighbors(v).size() - in;
    if (!(in > out)) flags.strong[dense[v]] = false;
    sum_in[dense[v]] += in;
    sum_out[dense[v]] += out;
  }
  for (std::size_t i = 0; i < c; ++i) flags.weak[i] = sum_in[i] > sum_out[i];
  return flags;
}

std::uint64_t lpa_objective(const Graph& g, Partition part) {
  require_cover(g, part);
  std::uint64_t h = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (NodeId u : g.neighbors(v)) h += part[u] == part[v];
  }
  return h;
}

CommunityReport community_report(const Graph& g, Partition part) {
  require_cover(g, part);
  std::vector<Label> dense;
  CommunityReport report;
  report.community_count = compact_labels(part, dense);
  report.sizes.assign(report.community_count, 0);
  for (Label l : dense) ++report.sizes[l];
  report.modularity = g.edge_count() > 0 ? modularity(g, part) : 0.0;
  report.dissatisfied_count = dissatisfied_count(g, part);
  auto flags = strong_weak_flags(g, part);
  report.strong_flags = std::move(flags.strong);
  report.weak_flags = std::move(flags.weak);
  report.objective_h = lpa_objective(g, part);
  return report;
}

}  // namespace labelflow
