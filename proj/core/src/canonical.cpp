#include "copnum/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include "copnum/graph6.hpp"

namespace copnum {

namespace {

using Rows = Graph::Rows;
using Mask = std::uint16_t;

struct Partition {
  std::array<Mask, kMaxVertices> cells{};
  int count = 0;
};

// FIFO of splitter cells. Capacity covers the initial cells plus every part
// created while refining to a discrete partition.
class SplitterQueue {
 public:
  void push(Mask m) {
    assert(tail_ < static_cast<int>(items_.size()));
    items_[tail_++] = m;
  }
  bool empty() const { return head_ == tail_; }
  Mask pop() { return items_[head_++]; }
  // Position of a pending splitter equal to m, or -1.
  int find(Mask m) const {
    for (int i = head_; i < tail_; ++i) {
      if (items_[i] == m) return i;
    }
    return -1;
  }
  void replace(int i, Mask m) { items_[i] = m; }

 private:
  std::array<Mask, 4 * kMaxVertices> items_{};
  int head_ = 0;
  int tail_ = 0;
};

// Refines p to the coarsest equitable partition finer than p reachable from
// the pending splitters. Every decision depends only on cell positions and
// neighbor counts, so the result is label-equivariant.
void refine(const Rows& adj, int n, Partition& p, SplitterQueue& queue) {
  while (!queue.empty() && p.count < n) {
    const Mask w = queue.pop();
    for (int x = 0; x < p.count; ++x) {
      const Mask cell = p.cells[x];
      if (std::has_single_bit(cell)) continue;

      std::array<Mask, kMaxVertices + 1> by_count;
      std::uint32_t present = 0;
      for (Mask rest = cell; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int c = std::popcount(static_cast<Mask>(adj[v] & w));
        if (((present >> c) & 1U) == 0) {
          present |= 1U << c;
          by_count[c] = 0;
        }
        by_count[c] |= static_cast<Mask>(1U << v);
      }
      const int parts = std::popcount(present);
      if (parts == 1) continue;

      for (int i = p.count - 1; i > x; --i) p.cells[i + parts - 1] = p.cells[i];
      p.count += parts - 1;

      int slot = x;
      int largest = -1;
      int largest_size = 0;
      for (std::uint32_t c = present; c != 0; c &= c - 1) {
        const Mask part = by_count[std::countr_zero(c)];
        p.cells[slot] = part;
        if (std::popcount(part) > largest_size) {
          largest_size = std::popcount(part);
          largest = slot;
        }
        ++slot;
      }

      const int pending = queue.find(cell);
      if (pending >= 0) {
        queue.replace(pending, p.cells[x]);
        for (int i = x + 1; i < x + parts; ++i) queue.push(p.cells[i]);
      } else {
        for (int i = x; i < x + parts; ++i) {
          if (i != largest) queue.push(p.cells[i]);
        }
      }
      x += parts - 1;
    }
  }
}

struct Leaf {
  Rows code{};
  Permutation order{};  // position -> vertex
  std::array<std::uint8_t, kMaxVertices> path{};
  int depth = 0;
};

class Search {
 public:
  Search(const Rows& adj, int n) : adj_(adj), n_(n) {}

  void run() {
    Partition root;
    root.cells[0] = static_cast<Mask>((1U << n_) - 1);
    root.count = 1;
    SplitterQueue queue;
    queue.push(root.cells[0]);
    refine(adj_, n_, root, queue);
    dfs(root, 0);
  }

  const Leaf& best() const { return best_; }
  std::vector<Permutation>& automorphisms() { return autos_; }
  std::size_t leaves() const { return leaves_; }

 private:
  static constexpr int kNoJump = -1;

  int dfs(const Partition& p, int depth) {
    if (p.count == n_) return leaf(p, depth);

    int target = -1;
    int target_size = kMaxVertices + 1;
    for (int i = 0; i < p.count; ++i) {
      const int s = std::popcount(p.cells[i]);
      if (s > 1 && s < target_size) {
        target = i;
        target_size = s;
      }
    }
    const Mask cell = p.cells[target];

    Mask explored = 0;
    std::size_t orbit_autos = static_cast<std::size_t>(-1);
    std::array<std::uint8_t, kMaxVertices> orbit{};
    for (Mask rest = cell; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (explored != 0 && !autos_.empty()) {
        if (orbit_autos != autos_.size()) {
          orbit = stabilizer_orbits(depth);
          orbit_autos = autos_.size();
        }
        bool equivalent = false;
        for (Mask e = explored; e != 0; e &= e - 1) {
          if (orbit[std::countr_zero(e)] == orbit[v]) {
            equivalent = true;
            break;
          }
        }
        if (equivalent) continue;
      }

      Partition child = p;
      for (int i = child.count - 1; i > target; --i) child.cells[i + 1] = child.cells[i];
      child.cells[target] = static_cast<Mask>(1U << v);
      child.cells[target + 1] = static_cast<Mask>(cell & ~(1U << v));
      ++child.count;
      SplitterQueue queue;
      queue.push(child.cells[target]);
      refine(adj_, n_, child, queue);

      path_[depth] = static_cast<std::uint8_t>(v);
      const int jump = dfs(child, depth + 1);
      explored |= static_cast<Mask>(1U << v);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& p, int depth) {
    ++leaves_;
    Leaf cur;
    std::array<std::uint8_t, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) {
      const int v = std::countr_zero(p.cells[i]);
      cur.order[i] = static_cast<std::uint8_t>(v);
      pos[v] = static_cast<std::uint8_t>(i);
    }
    for (int i = 0; i < n_; ++i) {
      Mask row = 0;
      for (Mask nb = adj_[cur.order[i]]; nb != 0; nb &= nb - 1) {
        row |= static_cast<Mask>(1U << pos[std::countr_zero(nb)]);
      }
      cur.code[i] = row;
    }
    cur.path = path_;
    cur.depth = depth;

    if (!have_first_) {
      first_ = cur;
      best_ = cur;
      have_first_ = true;
      return kNoJump;
    }
    if (cur.code == first_.code) return record_automorphism(first_, cur);
    const auto cmp = cur.code <=> best_.code;
    if (cmp > 0) {
      best_ = cur;
      return kNoJump;
    }
    if (cmp == 0) return record_automorphism(best_, cur);
    return kNoJump;
  }

  // cur and ref have identical relabeled graphs, so mapping ref's order onto
  // cur's order is an automorphism. If it fixes the common path prefix and maps
  // ref's branch to cur's branch, cur's subtree at the divergence node is a
  // copy of ref's and can be abandoned.
  int record_automorphism(const Leaf& ref, const Leaf& cur) {
    Permutation gamma{};
    for (int i = 0; i < n_; ++i) gamma[ref.order[i]] = cur.order[i];
    bool identity = true;
    for (int i = 0; i < n_; ++i) identity = identity && gamma[i] == i;
    if (identity) return kNoJump;
    if (autos_.size() < kMaxStoredAutomorphisms) autos_.push_back(gamma);

    const int common = std::min(ref.depth, cur.depth);
    int d = 0;
    while (d < common && ref.path[d] == cur.path[d]) ++d;
    if (d == common) return kNoJump;
    for (int i = 0; i < d; ++i) {
      if (gamma[ref.path[i]] != ref.path[i]) return kNoJump;
    }
    if (gamma[ref.path[d]] != cur.path[d]) return kNoJump;
    return d;
  }

  // Orbits of the group generated by stored automorphisms fixing path_[0..depth).
  std::array<std::uint8_t, kMaxVertices> stabilizer_orbits(int depth) const {
    std::vector<Permutation> fixing;
    for (const auto& a : autos_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = a[path_[i]] == path_[i];
      if (fixes) fixing.push_back(a);
    }
    return orbits(n_, fixing);
  }

  static constexpr std::size_t kMaxStoredAutomorphisms = 64;

  const Rows& adj_;
  int n_;
  std::array<std::uint8_t, kMaxVertices> path_{};
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<Permutation> autos_;
  std::size_t leaves_ = 0;
};

}  // namespace

std::array<std::uint8_t, kMaxVertices> orbits(int n, const std::vector<Permutation>& generators) {
  std::array<std::uint8_t, kMaxVertices> parent{};
  std::iota(parent.begin(), parent.end(), std::uint8_t{0});
  auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& g : generators) {
    for (int v = 0; v < n; ++v) {
      const int a = root(v);
      const int b = root(g[v]);
      if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
    }
  }
  std::array<std::uint8_t, kMaxVertices> rep{};
  for (int v = 0; v < n; ++v) rep[v] = static_cast<std::uint8_t>(root(v));
  return rep;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  Search search(g.rows(), g.order());
  search.run();
  const Leaf& best = search.best();
  CanonicalLabeling out;
  for (int i = 0; i < g.order(); ++i) out.label[best.order[i]] = static_cast<std::uint8_t>(i);
  out.canonical = Graph::from_rows_unchecked(g.order(), best.code);
  out.automorphisms = std::move(search.automorphisms());
  out.leaves = search.leaves();
  return out;
}

Graph canonical_graph(const Graph& g) {
  Search search(g.rows(), g.order());
  search.run();
  return Graph::from_rows_unchecked(g.order(), search.best().code);
}

CanonicalForm canonical_form(const Graph& g) { return {to_graph6(canonical_graph(g))}; }

}  // namespace copnum
