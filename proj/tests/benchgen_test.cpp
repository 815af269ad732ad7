#include <gtest/gtest.h>

#include <set>

#include "labelflow/benchgen.hpp"
#include "labelflow/errors.hpp"
#include "labelflow/metrics.hpp"
#include "test_support.hpp"

namespace labelflow {
namespace {

BenchmarkSpec spec_with(std::size_t n, double dbar, std::size_t dmax, double mu,
                        std::uint64_t seed) {
  BenchmarkSpec s;
  s.node_count = n;
  s.mean_degree = dbar;
  s.max_degree = dmax;
  s.mu = mu;
  s.seed = seed;
  return s;
}

double inter_fraction(const PlantedGraph& pg) {
  std::size_t inter = 0;
  for (const Edge& e : pg.graph.edges())
    inter += pg.ground_truth.label(e.u) != pg.ground_truth.label(e.v);
  return static_cast<double>(inter) / static_cast<double>(pg.graph.edge_count());
}

TEST(Generate, ZeroMixingIsFullyInternal) {
  auto pg = generate(spec_with(300, 10, 30, 0.0, 4));
  EXPECT_EQ(pg.realized_mu, 0.0);
  EXPECT_EQ(inter_fraction(pg), 0.0);
  auto flags = strong_weak_flags(pg.graph, pg.ground_truth.labels());
  for (bool strong : flags.strong) EXPECT_TRUE(strong);
  EXPECT_EQ(dissatisfied_count(pg.graph, pg.ground_truth.labels()), 0u);
}

TEST(Generate, RealizedStatisticsTrackRequest) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto pg = generate(spec_with(1000, 20, 100, 0.3, seed));
    EXPECT_NEAR(pg.realized_mu, 0.3, 0.02) << "seed " << seed;
    EXPECT_NEAR(pg.realized_mean_degree, 20.0, 1.0) << "seed " << seed;
    EXPECT_DOUBLE_EQ(pg.realized_mu, inter_fraction(pg));
    EXPECT_DOUBLE_EQ(pg.realized_mean_degree, 2.0 * static_cast<double>(pg.graph.edge_count()) /
                                                  static_cast<double>(pg.graph.node_count()));
  }
}

TEST(Generate, RejectsInfeasibleSpecs) {
  try {
    generate(spec_with(100, 50, 30, 0.1, 0));
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_STREQ(e.what(), "mean degree exceeds max degree");
  }
  EXPECT_THROW(generate(spec_with(100, 5, 30, 1.0, 0)), ConfigError);
  EXPECT_THROW(generate(spec_with(100, 5, 30, -0.1, 0)), ConfigError);
  BenchmarkSpec s = spec_with(100, 5, 30, 0.1, 0);
  s.community_min = 60;
  s.community_max = 50;
  EXPECT_THROW(generate(s), ConfigError);
}

TEST(Generate, IsDeterministic) {
  auto a = generate(spec_with(500, 12, 50, 0.4, 9));
  auto b = generate(spec_with(500, 12, 50, 0.4, 9));
  EXPECT_EQ(a.graph.edges(), b.graph.edges());
  EXPECT_TRUE(std::equal(a.ground_truth.labels().begin(), a.ground_truth.labels().end(),
                         b.ground_truth.labels().begin(), b.ground_truth.labels().end()));
  EXPECT_EQ(a.realized_mu, b.realized_mu);
  auto c = generate(spec_with(500, 12, 50, 0.4, 10));
  EXPECT_NE(a.graph.edges(), c.graph.edges());
}

TEST(GenerateProperty, SimpleGraphWithBoundedCommunities) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    BenchmarkSpec s = spec_with(400 + 50 * seed, 8 + seed, 40, 0.1 * static_cast<double>(seed),
                                seed);
    s.community_min = 15;
    s.community_max = 60;
    auto pg = generate(s);
    const Graph& g = pg.graph;
    ASSERT_EQ(g.node_count(), s.node_count);
    std::size_t degree_sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      degree_sum += g.degree(v);
      EXPECT_LE(g.degree(v), s.max_degree);
      EXPECT_FALSE(g.has_edge(v, v));
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Edge& e : g.edges()) EXPECT_TRUE(seen.emplace(e.u, e.v).second);

    std::vector<std::size_t> sizes(pg.ground_truth.label_space(), 0);
    for (Label l : pg.ground_truth.labels()) ++sizes[l];
    for (std::size_t size : sizes) {
      if (size == 0) continue;
      EXPECT_GE(size, s.community_min) << "seed " << seed;
      EXPECT_LE(size, s.community_max) << "seed " << seed;
    }
    EXPECT_NEAR(pg.realized_mu, s.mu, 0.05) << "seed " << seed;
  }
}

TEST(Sweep, LowMixingIsRecoveredByClassic) {
  SweepOptions opts;
  opts.seeds_per_point = 1;
  auto res = sweep(spec_with(1000, 20, 100, 0.1, 0), {0.1}, {{"classic", PropagationConfig{}}},
                   opts);
  ASSERT_EQ(res.rows.size(), 1u);
  ASSERT_EQ(res.summary.size(), 1u);
  EXPECT_GE(res.summary[0].mean_nmi, 0.95);
}

TEST(Sweep, GroundTruthDissatisfactionFollowsMixing) {
  SweepOptions opts;
  opts.seeds_per_point = 2;
  auto res = sweep(spec_with(500, 15, 60, 0.0, 3), {0.0, 0.9},
                   {{"classic", PropagationConfig{}}}, opts);
  ASSERT_EQ(res.summary.size(), 2u);
  EXPECT_EQ(res.summary[0].mean_gt_dissatisfied, 0.0);
  EXPECT_GT(res.summary[1].mean_gt_dissatisfied, 0.0);
}

TEST(Sweep, RowOrderAndThreadingInvariance) {
  PropagationConfig clpa;
  clpa.variant = Variant::clpa;
  clpa.cycles = 10;
  const std::vector<NamedAlgorithm> algos{{"classic", PropagationConfig{}}, {"clpa", clpa}};
  BenchmarkSpec base = spec_with(300, 10, 40, 0.2, 17);
  SweepOptions serial;
  serial.seeds_per_point = 3;
  SweepOptions parallel = serial;
  parallel.jobs = 3;
  auto a = sweep(base, {0.2, 0.4}, algos, serial);
  auto b = sweep(base, {0.2, 0.4}, algos, parallel);
  ASSERT_EQ(a.rows.size(), 12u);
  ASSERT_EQ(a.summary.size(), 4u);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].mu, b.rows[i].mu);
    EXPECT_EQ(a.rows[i].seed, b.rows[i].seed);
    EXPECT_EQ(a.rows[i].algorithm, b.rows[i].algorithm);
    EXPECT_EQ(a.rows[i].nmi, b.rows[i].nmi);
    EXPECT_EQ(a.rows[i].communities, b.rows[i].communities);
    EXPECT_EQ(a.rows[i].iterations, b.rows[i].iterations);
  }
  EXPECT_EQ(a.rows[0].algorithm, "classic");
  EXPECT_EQ(a.rows[1].algorithm, "clpa");
  EXPECT_EQ(a.rows[0].seed, a.rows[1].seed);
  EXPECT_EQ(a.rows[0].seed, sweep_graph_seed(17, 0, 0));
  EXPECT_EQ(a.rows[6].mu, 0.4);
  EXPECT_EQ(a.summary[0].runs, 3u);
}

}  // namespace
}  // namespace labelflow
