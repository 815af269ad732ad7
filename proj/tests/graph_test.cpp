#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "labelflow/errors.hpp"
#include "labelflow/graph.hpp"
#include "test_support.hpp"

namespace labelflow {
namespace {

using testing::star;
using testing::triangle;

LoadedGraph load(const std::string& text, EdgeListOptions opts = {}) {
  std::istringstream in(text);
  return load_edge_list(in, opts);
}

// Edge set in external ids; nodes seen only in self-loops are not representable
// in an edge list and drop out on re-serialization.
std::vector<std::pair<ExternalId, ExternalId>> external_edges(const Graph& g) {
  std::vector<std::pair<ExternalId, ExternalId>> out;
  for (const Edge& e : g.edges()) out.emplace_back(g.external_id(e.u), g.external_id(e.v));
  return out;
}

std::size_t degree_sum(const Graph& g) {
  std::size_t s = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) s += g.degree(v);
  return s;
}

TEST(EdgeList, TriangleLoads) {
  auto [g, stats] = load("0 1\n1 2\n0 2");
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(stats.edges_read, 3u);
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(EdgeList, DropsDuplicatesAndSelfLoops) {
  auto [g, stats] = load("5 7\n7 5\n5 5");
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(stats.duplicate_edges, 1u);
  EXPECT_EQ(stats.self_loops, 1u);
}

TEST(EdgeList, RemapsSparseIds) {
  auto [g, stats] = load("20 30\n10 20\n");
  ASSERT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.internal_id(10), NodeId{0});
  EXPECT_EQ(g.internal_id(20), NodeId{1});
  EXPECT_EQ(g.internal_id(30), NodeId{2});
  EXPECT_FALSE(g.internal_id(15).has_value());
  EXPECT_EQ(g.external_id(2), 30u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(EdgeList, SkipsCommentsAndBlankLines) {
  auto [g, stats] = load("# FromNodeId\tToNodeId\n\n0\t1\n  # indented comment\n1\t2\n");
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(EdgeList, CustomDelimiterAndCommentPrefix) {
  EdgeListOptions opts;
  opts.delimiter = ',';
  opts.comment_prefix = "%";
  auto [g, stats] = load("% header\n1, 2\n2,3\n", opts);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(EdgeList, OneBasedIds) {
  EdgeListOptions opts;
  opts.id_base = IdBase::one;
  auto [g, stats] = load("1 2\n2 3\n", opts);
  EXPECT_EQ(g.external_id(0), 0u);
  EXPECT_EQ(g.external_id(2), 2u);
  EXPECT_THROW(load("0 1\n", opts), ParseError);
}

TEST(EdgeList, DeclaredNodeCountKeepsIsolatedNodes) {
  EdgeListOptions opts;
  opts.node_count = 5;
  auto [g, stats] = load("0 1\n", opts);
  EXPECT_EQ(g.node_count(), 5u);
  EXPECT_EQ(g.degree(4), 0u);
  EXPECT_THROW(load("0 9\n", opts), ParseError);
}

TEST(EdgeList, MalformedLineReportsLineNumber) {
  try {
    load("0 1\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load("0 1 2\n"), ParseError);
  EXPECT_THROW(load("-1 2\n"), ParseError);
  EXPECT_THROW(load("3\n"), ParseError);
}

TEST(EdgeList, EmptyInputIsAnError) {
  try {
    load("# nothing here\n\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_STREQ(e.what(), "empty graph");
  }
  EXPECT_THROW(load("4 4\n"), ParseError);
}

TEST(Graph, Degree) {
  EXPECT_EQ(triangle().degree(1), 2u);
  EXPECT_EQ(star(5).degree(0), 5u);
  EXPECT_EQ(star(5).degree(3), 1u);
  EXPECT_EQ(testing::path3().degree(1), 2u);
  EXPECT_THROW(triangle().degree(3), std::out_of_range);
}

TEST(Graph, NeighborsSortedAndSymmetric) {
  Graph g = testing::erdos_renyi(40, 0.2, 3);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto row = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(row.begin(), row.end()));
    for (NodeId u : row) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(g.has_edge(u, v));
    }
  }
}

TEST(Graph, RejectsUnsortedExternalIds) {
  std::vector<Edge> e{{0, 1}};
  EXPECT_THROW(Graph::from_edges(2, e, {5, 3}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(2, e, {5}), std::invalid_argument);
}

// Property: handshake identity and re-serialization round trip on random
// edge lists with duplicates, self-loops and sparse ids.
TEST(EdgeListProperty, HandshakeAndRoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> count(1, 200);
    std::uniform_int_distribution<ExternalId> id(0, 60);
    std::ostringstream text;
    const int lines = count(rng);
    for (int i = 0; i < lines; ++i) text << id(rng) * 7 + 3 << ' ' << id(rng) * 7 + 3 << '\n';

    LoadedGraph first;
    try {
      first = load(text.str());
    } catch (const ParseError&) {
      continue;  // every line was a self-loop
    }
    const Graph& g = first.graph;
    EXPECT_EQ(degree_sum(g), 2 * g.edge_count()) << "seed " << seed;
    EXPECT_EQ(first.stats.edges_read,
              g.edge_count() + first.stats.duplicate_edges + first.stats.self_loops);

    std::ostringstream out;
    write_edge_list(out, g);
    auto second = load(out.str());
    EXPECT_EQ(second.stats.duplicate_edges, 0u);
    EXPECT_EQ(second.stats.self_loops, 0u);
    EXPECT_EQ(external_edges(second.graph), external_edges(g)) << "seed " << seed;
  }
}

TEST(EdgeList, ReadsSnapStyleFixture) {
  auto [g, stats] = load_edge_list_file(std::string(LABELFLOW_TEST_DATA) + "/snap_sample.txt");
  EXPECT_EQ(g.node_count(), 8u);
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_EQ(stats.duplicate_edges, 2u);
  EXPECT_EQ(degree_sum(g), 20u);
}

}  // namespace
}  // namespace labelflow
