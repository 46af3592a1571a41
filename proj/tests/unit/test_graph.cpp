#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "copnum/enumerate.hpp"
#include "copnum/graph.hpp"
#include "copnum/graph6.hpp"
#include "copnum/properties.hpp"
#include "oracles.hpp"

using namespace copnum;

namespace {

VertexSet set_of(std::initializer_list<Vertex> vs) {
  VertexSet s;
  for (Vertex v : vs) s.insert(v);
  return s;
}

}  // namespace

TEST(VertexSet, Basics) {
  VertexSet s = set_of({1, 4, 7});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(5));
  EXPECT_EQ(s.front(), 1);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{1, 4, 7}));
  EXPECT_EQ(s - set_of({4}), set_of({1, 7}));
  EXPECT_TRUE(set_of({1}).is_subset_of(s));
  EXPECT_EQ(VertexSet::first(3), set_of({0, 1, 2}));
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(0), Error);
  EXPECT_THROW(Graph(17), Error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), Error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), Error);
  Graph::Rows rows{};
  rows[0] = 0b10;
  EXPECT_THROW(Graph::from_rows(2, rows), Error);  // asymmetric
  rows[1] = 0b01;
  EXPECT_NO_THROW(Graph::from_rows(2, rows));
}

TEST(Graph, Petersen) {
  const Graph p = petersen();
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.edge_count(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
  EXPECT_EQ(girth(p), 5);
}

TEST(Graph, PermuteAndInduced) {
  const Graph path = path_graph(4);
  const std::vector<Vertex> perm{3, 2, 1, 0};
  EXPECT_EQ(permute(path, perm), path);
  const Graph sub = induced_subgraph(cycle_graph(5), set_of({0, 1, 2}));
  EXPECT_EQ(sub, path_graph(3));
  EXPECT_EQ(remove_vertex(star_graph(3), 0), Graph(3));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_EQ(components(Graph::from_edges(4, {{0, 1}, {2, 3}}), VertexSet::first(4)).size(), 2U);
}

TEST(Graph6, SpecExamples) {
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(path_graph(2)), "A_");
  EXPECT_EQ(parse_graph6("@"), Graph(1));
  const Graph g = parse_graph6("D?{");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(to_graph6(g), "D?{");
  EXPECT_EQ(parse_graph6(to_graph6(petersen())), petersen());
}

TEST(Graph6, MatchesBitLevelDecoder) {
  for (const std::string s : {"@", "A_", "A?", "D?{", "Bw", "Ch", "DQc", "I@OZCMgs?", "Es\\o"}) {
    oracle::Matrix expected;
    ASSERT_TRUE(oracle::decode_graph6(s, expected)) << s;
    EXPECT_EQ(oracle::matrix_of(parse_graph6(s)), expected) << s;
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % kMaxVertices);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const std::string s = to_graph6(g);
    oracle::Matrix decoded;
    ASSERT_TRUE(oracle::decode_graph6(s, decoded));
    EXPECT_EQ(decoded, oracle::matrix_of(g));
    EXPECT_EQ(parse_graph6(s), g);
  }
}

TEST(Graph6, RoundTripEveryGraphUpTo5) {
  // Every labeled graph on up to 5 vertices.
  for (int n = 1; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << bits); ++mask) {
      std::vector<Edge> edges;
      int k = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
          if ((mask >> k) & 1) edges.emplace_back(i, j);
      const Graph g = Graph::from_edges(n, edges);
      const std::string s = to_graph6(g);
      EXPECT_EQ(to_graph6(parse_graph6(s)), s);
    }
  }
}

TEST(Graph6, Errors) {
  auto kind = [](const std::string& s) {
    try {
      parse_graph6(s);
    } catch (const Graph6ParseError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error for " << s;
    return Graph6Error::Empty;
  };
  EXPECT_EQ(kind(""), Graph6Error::Empty);
  EXPECT_EQ(kind("B"), Graph6Error::WrongByteCount);
  EXPECT_EQ(kind("Bww"), Graph6Error::WrongByteCount);
  EXPECT_EQ(kind("A\x01"), Graph6Error::InvalidCharacter);
  EXPECT_EQ(kind("A`"), Graph6Error::NonzeroPadding);
  EXPECT_EQ(kind("Q???????????????????????????????????????"), Graph6Error::OrderOutOfRange);
  EXPECT_NO_THROW(parse_graph6("A_\n"));
}

TEST(EdgeList, RoundTrip) {
  std::stringstream ss;
  write_edge_list(ss, petersen());
  EXPECT_EQ(read_edge_list(ss), petersen());
  std::istringstream bad("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(bad), Error);
}

TEST(Properties, ClosedNeighborhood) {
  const Graph p = petersen();
  EXPECT_EQ(closed_neighborhood(p, set_of({0})).size(), 4);
  EXPECT_TRUE(closed_neighborhood(p, VertexSet{}).empty());
  EXPECT_EQ(closed_neighborhood(complete_graph(4), set_of({0})), VertexSet::first(4));
  EXPECT_EQ(open_neighborhood(path_graph(3), set_of({0})), set_of({1}));
}

TEST(Properties, PrivateNeighbors) {
  const std::vector<Vertex> one{2};
  EXPECT_EQ(private_neighbors(path_graph(5), one, 0), path_graph(5).neighbors(2));
  const std::vector<Vertex> ends{0, 4};
  EXPECT_EQ(private_neighbors(path_graph(5), ends, 0), set_of({1}));
  const std::vector<Vertex> pair{0, 1};
  EXPECT_TRUE(private_neighbors(complete_graph(4), pair, 0).empty());
  EXPECT_THROW(private_neighbors(complete_graph(4), pair, 2), std::out_of_range);
}

TEST(Properties, Girth) {
  EXPECT_EQ(girth(petersen()), 5);
  EXPECT_EQ(girth(cycle_graph(7)), 7);
  EXPECT_FALSE(girth(star_graph(4)).has_value());
  EXPECT_FALSE(girth(path_graph(6)).has_value());
  EXPECT_EQ(girth(complete_graph(4)), 3);
}

TEST(Properties, DominatedVertices) {
  const auto k2 = dominated_vertices(path_graph(2));
  EXPECT_EQ(k2, (std::vector<Edge>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(dominated_vertices(petersen()).empty());
  const auto p4 = dominated_vertices(path_graph(4));
  EXPECT_NE(std::find(p4.begin(), p4.end(), Edge{0, 1}), p4.end());
  EXPECT_NE(std::find(p4.begin(), p4.end(), Edge{3, 2}), p4.end());
}

TEST(Properties, DominatedVerticesLabelCovariant) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> mapped;
    for (auto [v, w] : dominated_vertices(g)) mapped.emplace_back(perm[v], perm[w]);
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(dominated_vertices(permute(g, perm)), mapped);
  }
}

TEST(Properties, Dismantling) {
  const auto tree = dismantling_order(star_graph(5));
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(tree->size(), 5U);
  EXPECT_FALSE(dismantling_order(cycle_graph(4)).has_value());
  EXPECT_FALSE(dismantling_order(petersen()).has_value());
  EXPECT_TRUE(dismantling_order(complete_graph(5)).has_value());
  EXPECT_THROW(dismantling_order(Graph(3)), DisconnectedGraph);
}

TEST(Properties, DismantlingMatchesNaiveDeletion) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : generate(GenSpec{n})) {
      EXPECT_EQ(dismantling_order(g).has_value(), oracle::naive_dismantleable(g)) << to_graph6(g);
    }
  }
}

TEST(Properties, InducedCycle) {
  const Graph p = petersen();
  for (Vertex u = 0; u < 10; ++u) {
    EXPECT_TRUE(induced_is_cycle(p, p.vertices() - closed_neighborhood(p, VertexSet::single(u)), 6));
  }
  EXPECT_TRUE(induced_is_cycle(complete_graph(4), set_of({0, 1, 2}), 3));
  EXPECT_FALSE(induced_is_cycle(complete_graph(4), VertexSet::first(4), 4));
  EXPECT_FALSE(induced_is_cycle(cycle_graph(5), VertexSet::first(5), 4));
  const Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(induced_is_cycle(two_triangles, VertexSet::first(6), 6));
}
