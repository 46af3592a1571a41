#include "copnum/graph.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace copnum {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw Error("graph order " + std::to_string(n) + " outside 1.." +
                std::to_string(kMaxVertices));
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, VertexSet s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  return os << '}';
}

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") out of range for n = " + std::to_string(n));
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    g.rows_[u] |= static_cast<std::uint16_t>(1U << v);
    g.rows_[v] |= static_cast<std::uint16_t>(1U << u);
  }
  return g;
}

Graph Graph::from_rows(int n, const Rows& rows) {
  check_order(n);
  const std::uint32_t in_range = (1U << n) - 1;
  for (int v = 0; v < kMaxVertices; ++v) {
    if (v >= n) {
      if (rows[v] != 0) throw Error("row beyond order is nonzero");
      continue;
    }
    if ((rows[v] & ~in_range) != 0) throw Error("neighbor out of range");
    if ((rows[v] >> v) & 1U) throw Error("self-loop at vertex " + std::to_string(v));
    for (Vertex u : VertexSet(rows[v])) {
      if (((rows[u] >> v) & 1U) == 0) throw Error("adjacency is not symmetric");
    }
  }
  return from_rows_unchecked(n, rows);
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

int Graph::min_degree() const noexcept {
  int d = kMaxVertices;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const noexcept {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw Error("permutation size mismatch");
  VertexSet seen;
  for (Vertex p : perm) {
    if (p < 0 || p >= n || seen.contains(p)) throw Error("not a permutation");
    seen.insert(p);
  }
  Graph::Rows rows{};
  for (int v = 0; v < n; ++v) {
    std::uint16_t row = 0;
    for (Vertex u : g.neighbors(v)) row |= static_cast<std::uint16_t>(1U << perm[u]);
    rows[perm[v]] = row;
  }
  return Graph::from_rows_unchecked(n, rows);
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw Error("induced subgraph on the empty set");
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for (Vertex v : s) index[v] = k++;
  Graph::Rows rows{};
  for (Vertex v : s) {
    std::uint16_t row = 0;
    for (Vertex u : g.neighbors(v) & s) row |= static_cast<std::uint16_t>(1U << index[u]);
    rows[index[v]] = row;
  }
  return Graph::from_rows_unchecked(k, rows);
}

Graph remove_vertex(const Graph& g, Vertex v) {
  return induced_subgraph(g, g.vertices() - VertexSet::single(v));
}

VertexSet component_within(const Graph& g, VertexSet within, Vertex start) {
  VertexSet reached = VertexSet::single(start);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & within) - reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = component_within(g, rest, rest.front());
    out.push_back(c);
    rest -= c;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return component_within(g, g.vertices(), 0) == g.vertices();
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

}  // namespace copnum
