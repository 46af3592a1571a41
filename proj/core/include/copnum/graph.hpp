#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "copnum/error.hpp"

namespace copnum {

/// Hot-path vertex capacity: one 16-bit neighbor mask per vertex.
inline constexpr int kMaxVertices = 16;

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Set of vertices 0..kMaxVertices-1 stored as a bit mask.
class VertexSet {
 public:
  using Bits = std::uint32_t;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Bits rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Bits bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet single(Vertex v) { return VertexSet(Bits{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet first(int n) { return VertexSet((Bits{1} << n) - 1); }

  constexpr Bits bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= Bits{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(Bits{1} << v); }

  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  Bits bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, VertexSet s);

/// Immutable simple undirected graph on vertices 0..n-1, 1 <= n <= kMaxVertices.
class Graph {
 public:
  using Rows = std::array<std::uint16_t, kMaxVertices>;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Validates symmetry, irreflexivity and range of the rows.
  static Graph from_rows(int n, const Rows& rows);
  /// Caller guarantees the invariants; used on hot paths.
  static Graph from_rows_unchecked(int n, const Rows& rows) noexcept {
    Graph g;
    g.n_ = n;
    g.rows_ = rows;
    return g;
  }

  int order() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return VertexSet::first(n_); }
  VertexSet neighbors(Vertex v) const noexcept { return VertexSet(rows_[v]); }
  VertexSet closed_neighbors(Vertex v) const noexcept {
    return VertexSet(rows_[v] | (1U << v));
  }
  int degree(Vertex v) const noexcept { return std::popcount(rows_[v]); }
  bool adjacent(Vertex u, Vertex v) const noexcept { return (rows_[u] >> v) & 1U; }
  int edge_count() const noexcept;
  int min_degree() const noexcept;
  int max_degree() const noexcept;
  const Rows& rows() const noexcept { return rows_; }

  /// Edges (u, v), u < v, ordered by u then v.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const noexcept { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  Graph() = default;

  int n_ = 1;
  Rows rows_{};
};

/// perm[v] is the new label of v.
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// G[S] with the members of S relabeled 0..|S|-1 in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// G - v with vertices above v shifted down by one.
Graph remove_vertex(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

/// Vertices reachable from `start` inside `within` (start must be in `within`).
VertexSet component_within(const Graph& g, VertexSet within, Vertex start);

std::vector<VertexSet> components(const Graph& g, VertexSet within);

// Named constructions.
Graph petersen();
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

}  // namespace copnum
