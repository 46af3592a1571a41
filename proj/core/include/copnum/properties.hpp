#pragma once

#include <optional>
#include <span>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

/// Shortest cycle length; nullopt for forests.
using Girth = std::optional<int>;

/// Union of closed neighborhoods of the members of s.
VertexSet closed_neighborhood(const Graph& g, VertexSet s);

/// Union of open neighborhoods of s, minus s itself.
VertexSet open_neighborhood(const Graph& g, VertexSet s);

/// Neighbors of u[j] outside the closed neighborhood of the other members of u.
/// Throws std::out_of_range if j does not index u.
VertexSet private_neighbors(const Graph& g, std::span<const Vertex> u, std::size_t j);

Girth girth(const Graph& g);

/// All pairs (v, w), v != w, with N[v] a subset of N[w], in ascending order.
std::vector<Edge> dominated_vertices(const Graph& g);

/// Greedy removal of the smallest-index dominated vertex. Returns the n-1
/// removed vertices in removal order, or nullopt if the graph is not
/// dismantleable. Throws DisconnectedGraph.
std::optional<std::vector<Vertex>> dismantling_order(const Graph& g);

/// True iff |s| == k and G[s] is a single cycle (connected and 2-regular).
bool induced_is_cycle(const Graph& g, VertexSet s, int k);

}  // namespace copnum
