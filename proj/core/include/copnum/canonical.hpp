#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

/// Graph6 bytes of the canonically relabeled graph. Equal iff isomorphic.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

using Permutation = std::array<std::uint8_t, kMaxVertices>;

struct CanonicalLabeling {
  /// label[v] is the canonical position of vertex v.
  Permutation label{};
  /// The input relabeled by `label`.
  Graph canonical{1};
  /// Automorphisms discovered during the search (image of v at index v).
  std::vector<Permutation> automorphisms;
  /// Search leaves evaluated.
  std::size_t leaves = 0;
};

/// Color refinement with individualization backtracking. The canonical graph
/// is the lexicographically largest adjacency (row by row) over the search
/// tree leaves; subtrees equivalent under a discovered automorphism are skipped.
CanonicalLabeling canonical_labeling(const Graph& g);

Graph canonical_graph(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// Orbit representative (smallest member) of every vertex under the group
/// generated by `generators`.
std::array<std::uint8_t, kMaxVertices> orbits(int n, const std::vector<Permutation>& generators);

}  // namespace copnum
