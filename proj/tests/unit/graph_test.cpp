// Copyright 2026 The commcp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "commcp/commcp.hpp"
#include "oracles/oracles.hpp"
#include "support/fixtures.hpp"

namespace commcp {
namespace {

EdgeListResult load(const std::string& text, bool strict = true) {
  std::istringstream in(text);
  return load_edge_list(in, EdgeListOptions{.strict = strict});
}

TEST(LoadEdgeList, CollapsesRepeatedAndReversedLines) {
  const auto r = load("a b\nb a\na b\n");
  EXPECT_EQ(r.graph.node_count(), 2u);
  EXPECT_EQ(r.graph.edge_count(), 1u);
  EXPECT_EQ(r.duplicates_collapsed, 2u);
  EXPECT_FALSE(r.warning.empty());
}

TEST(LoadEdgeList, StrictSelfLoopNamesTheLine) {
  try {
    load("a a\n");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos) << e.what();
  }
}

TEST(LoadEdgeList, LenientDropsSelfLoopsWithWarning) {
  const auto r = load("a a\na b\n", false);
  EXPECT_EQ(r.graph.node_count(), 2u);
  EXPECT_EQ(r.graph.edge_count(), 1u);
  EXPECT_EQ(r.self_loops_dropped, 1u);
  EXPECT_NE(r.warning.find("self-loop"), std::string::npos);
}

TEST(LoadEdgeList, PathOfFourNodes) {
  const auto r = load("a b\nb c\nc d\n");
  EXPECT_EQ(r.graph.node_count(), 4u);
  EXPECT_EQ(r.graph.edge_count(), 3u);
  EXPECT_DOUBLE_EQ(compute_stats(r.graph).density, 0.5);
}

TEST(LoadEdgeList, EmptyInputIsEmptyGraph) {
  const auto r = load("");
  EXPECT_EQ(r.graph.node_count(), 0u);
  EXPECT_EQ(r.graph.edge_count(), 0u);
  const auto only_comments = load("# header\n\n# more\n");
  EXPECT_EQ(only_comments.graph.node_count(), 0u);
}

TEST(LoadEdgeList, MalformedLineReportsLineNumber) {
  try {
    load("# c\na b\nc\n");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(LoadEdgeList, ExtraColumnsStrictVersusLenient) {
  EXPECT_THROW(load("a b 1\n"), DataError);
  const auto r = load("a b 1\nb c 2\n", false);
  EXPECT_EQ(r.graph.edge_count(), 2u);
  EXPECT_EQ(r.extra_columns_ignored, 2u);
}

TEST(LoadEdgeList, DetectsDelimiters) {
  for (const std::string text : {"x\ty\ny\tz\n", "x,y\ny,z\n", "x  y\ny z\n"}) {
    const auto r = load(text);
    EXPECT_EQ(r.graph.node_count(), 3u) << text;
    EXPECT_EQ(r.graph.edge_count(), 2u) << text;
  }
}

TEST(LoadEdgeList, IdsFollowFirstAppearance) {
  const auto r = load("zeta alpha\nmid zeta\n");
  EXPECT_EQ(r.graph.label(0), "zeta");
  EXPECT_EQ(r.graph.label(1), "alpha");
  EXPECT_EQ(r.graph.label(2), "mid");
  EXPECT_EQ(r.graph.find("mid"), NodeId{2});
  EXPECT_FALSE(r.graph.find("nope").has_value());
}

TEST(LoadEdgeList, RoundTripsThroughWriter) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = fixtures::random_graph(15, 0.3, rng);
    std::ostringstream out;
    write_edge_list(g, out);
    const auto again = load(out.str()).graph;
    std::set<std::pair<std::string, std::string>> a, b;
    for (const auto& e : g.edges()) a.insert(std::minmax(g.label(e.u), g.label(e.v)));
    for (const auto& e : again.edges()) {
      b.insert(std::minmax(again.label(e.u), again.label(e.v)));
    }
    EXPECT_EQ(a, b);
  }
}

TEST(GraphInvariants, EdgesNormalizedAndAdjacencySymmetric) {
  const Graph g(4, {{2, 1}, {1, 2}, {3, 0}});
  ASSERT_EQ(g.edge_count(), 2u);
  for (const auto& e : g.edges()) EXPECT_LT(e.u, e.v);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(GraphInvariants, RejectsSelfLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidArgument);
}

TEST(GraphInvariants, DegreeSumIsTwiceEdges) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = fixtures::random_graph(25, 0.2, rng);
    std::size_t total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) total += g.degree(v);
    EXPECT_EQ(total, 2 * g.edge_count());
  }
}

TEST(Betweenness, PathMiddleIsOne) {
  const auto bc = betweenness(fixtures::path(3));
  EXPECT_DOUBLE_EQ(bc[0], 0.0);
  EXPECT_DOUBLE_EQ(bc[1], 1.0);
  EXPECT_DOUBLE_EQ(bc[2], 0.0);
}

TEST(Betweenness, CliqueIsZero) {
  for (double x : betweenness(fixtures::complete(4))) EXPECT_DOUBLE_EQ(x, 0.0);
}

TEST(Betweenness, StarCenterMediatesAllLeafPairs) {
  const auto bc = betweenness(fixtures::star(5));
  EXPECT_DOUBLE_EQ(bc[0], 10.0);
  for (std::size_t i = 1; i < bc.size(); ++i) EXPECT_DOUBLE_EQ(bc[i], 0.0);
}

TEST(Betweenness, DisconnectedPairsContributeNothing) {
  // Two separate paths of three nodes.
  const Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  const auto bc = betweenness(g);
  EXPECT_DOUBLE_EQ(bc[1], 1.0);
  EXPECT_DOUBLE_EQ(bc[4], 1.0);
  EXPECT_DOUBLE_EQ(bc[0] + bc[2] + bc[3] + bc[5], 0.0);
}

TEST(Betweenness, MatchesAllPairsOracle) {
  Rng rng(2026);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const Graph g = fixtures::random_graph(n, 0.15 + 0.05 * (trial % 8), rng);
    const auto got = betweenness(g);
    const auto want = oracle::betweenness(static_cast<int>(n), fixtures::pairs_of(g));
    for (std::size_t v = 0; v < n; ++v) EXPECT_NEAR(got[v], want[v], 1e-9) << "trial " << trial;
  }
}

TEST(Betweenness, TreeTotalCountsInteriorNodesOnPaths) {
  // A tree has one path per pair, so total betweenness is the sum over
  // pairs of (distance - 1).
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 10;
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) {
      std::uniform_int_distribution<NodeId> parent(0, v - 1);
      edges.push_back({parent(rng), v});
    }
    const Graph g(n, edges);
    double expected = 0;
    for (NodeId s = 0; s < n; ++s) {
      std::vector<int> dist(n, -1);
      std::vector<NodeId> queue{s};
      dist[s] = 0;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (NodeId w : g.neighbors(queue[i])) {
          if (dist[w] < 0) {
            dist[w] = dist[queue[i]] + 1;
            queue.push_back(w);
          }
        }
      }
      for (NodeId t = s + 1; t < n; ++t) expected += dist[t] - 1;
    }
    const auto bc = betweenness(g);
    EXPECT_NEAR(std::accumulate(bc.begin(), bc.end(), 0.0), expected, 1e-9);
  }
}

TEST(Stats, Clique) {
  const auto s = compute_stats(fixtures::complete(4));
  EXPECT_DOUBLE_EQ(s.density, 1.0);
  EXPECT_DOUBLE_EQ(s.mean_degree, 3.0);
  EXPECT_DOUBLE_EQ(s.mean_betweenness, 0.0);
  EXPECT_DOUBLE_EQ(s.transitivity, 1.0);
}

TEST(Stats, EmptyGraphOnFiveNodes) {
  const auto s = compute_stats(Graph(5, {}));
  EXPECT_DOUBLE_EQ(s.density, 0.0);
  EXPECT_DOUBLE_EQ(s.mean_degree, 0.0);
}

TEST(Stats, DensityConventionBelowTwoNodes) {
  EXPECT_DOUBLE_EQ(density(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(density(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(density(10, 9), 0.2);
}

Graph two_triangles_with_groups() {
  Graph g = fixtures::graph_from_text("a b\nb c\nc a\nd e\ne f\nf d\n");
  std::istringstream attrs("node,side\na,left\nb,left\nc,left\nd,right\ne,right\nf,right\n");
  return g.with_attributes(read_attributes(attrs, g));
}

TEST(Stats, GroupDensityUsesInducedSubgraph) {
  const auto s = compute_stats(two_triangles_with_groups(), "side");
  EXPECT_DOUBLE_EQ(s.density, 0.4);
  ASSERT_EQ(s.groups.size(), 2u);
  EXPECT_EQ(s.groups[0].value, "left");
  EXPECT_EQ(s.groups[1].value, "right");
  for (const auto& gr : s.groups) {
    EXPECT_EQ(gr.node_count, 3u);
    EXPECT_EQ(gr.edge_count, 3u);
    EXPECT_DOUBLE_EQ(gr.density, 1.0);
    EXPECT_DOUBLE_EQ(gr.mean_degree, 2.0);
  }
}

TEST(Stats, GroupByMissingAttributeFails) {
  Graph g = fixtures::graph_from_text("a b\nb c\n");
  std::istringstream attrs("node,side\na,x\nb,y\n");
  g = g.with_attributes(read_attributes(attrs, g));
  EXPECT_THROW(compute_stats(g, "side"), DataError);
  EXPECT_THROW(compute_stats(g, "other"), DataError);
}

TEST(Stats, TransitivityOfPathAndTriangle) {
  EXPECT_DOUBLE_EQ(transitivity(fixtures::path(4)), 0.0);
  EXPECT_DOUBLE_EQ(transitivity(fixtures::complete(3)), 1.0);
  // Triangle plus a pendant: 3 closed triples out of 5.
  const Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_DOUBLE_EQ(transitivity(g), 3.0 / 5.0);
}

TEST(Attributes, UnknownNodeIsDataError) {
  const Graph g = fixtures::graph_from_text("a b\n");
  std::istringstream attrs("node,role\nz,x\n");
  EXPECT_THROW(read_attributes(attrs, g), DataError);
}

TEST(Attributes, MissingRowsBecomeMissingValues) {
  const Graph g = fixtures::graph_from_text("a b\nb c\n");
  std::istringstream attrs("node,role,region\na,PI,North\nc,,South\n");
  const auto at = read_attributes(attrs, g);
  EXPECT_EQ(at.keys(), (std::vector<std::string>{"role", "region"}));
  EXPECT_EQ(at.get(0, "role"), std::optional<std::string>("PI"));
  EXPECT_FALSE(at.get(1, "role").has_value());
  EXPECT_FALSE(at.get(2, "role").has_value());
  EXPECT_EQ(at.get(2, "region"), std::optional<std::string>("South"));
}

}  // namespace
}  // namespace commcp
