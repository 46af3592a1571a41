#include "copnum/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "copnum/canonical.hpp"
#include "copnum/graph6.hpp"

namespace copnum {

void GenSpec::validate() const {
  if (n < 1 || n > kMaxVertices) {
    throw Error("order must be in 1.." + std::to_string(kMaxVertices));
  }
  const int hi = effective_max_degree();
  if (min_degree < 0 || min_degree > hi || hi > n - 1) {
    throw Error("degree bounds must satisfy 0 <= min <= max <= n-1");
  }
}

std::array<std::uint64_t, 2> graph6_key(const Graph& g) {
  std::array<std::uint64_t, 2> key{};
  int k = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) key[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    }
  }
  return key;
}

namespace {

using Mask = std::uint16_t;

struct LevelRules {
  int order;       // order of the graphs being produced
  int remaining;   // vertices still to be added after this level
  int min_degree;  // final minimum degree
  int max_degree;
  bool connected;
};

// Everything about a parent needed to test its children.
class Augmenter {
 public:
  Augmenter(const Graph& parent, const LevelRules& rules) : parent_(parent), rules_(rules) {}

  std::vector<Graph> children() const;

 private:
  bool accept(const Graph& child, Graph& canonical) const;

  const Graph& parent_;
  const LevelRules& rules_;
};

bool non_cut(const Graph& g, Vertex x) {
  const VertexSet rest = g.vertices() - VertexSet::single(x);
  if (rest.empty()) return true;
  return component_within(g, rest, rest.front()) == rest;
}

bool Augmenter::accept(const Graph& child, Graph& canonical) const {
  const int n = child.order();
  const Vertex v = n - 1;
  std::array<int, kMaxVertices> deg{};
  for (int x = 0; x < n; ++x) deg[x] = child.degree(x);
  auto key = [&](Vertex x) {
    int sum = 0;
    for (Vertex y : child.neighbors(x)) sum += deg[y];
    return (deg[x] << 10) + sum;
  };
  const int kv = key(v);
  VertexSet ties = VertexSet::single(v);
  for (int x = 0; x < v; ++x) {
    const int kx = key(x);
    if (kx < kv) continue;
    // The new vertex is never a cut vertex: removing it leaves the parent.
    if (rules_.connected && !non_cut(child, x)) continue;
    if (kx > kv) return false;
    ties.insert(x);
  }

  CanonicalLabeling lab = canonical_labeling(child);
  canonical = lab.canonical;
  if (ties.size() == 1) return true;
  Vertex chosen = v;
  for (Vertex x : ties) {
    if (lab.label[x] > lab.label[chosen]) chosen = x;
  }
  if (chosen == v) return true;
  if (!lab.automorphisms.empty()) {
    const auto rep = orbits(n, lab.automorphisms);
    if (rep[chosen] == rep[v]) return true;
  }
  return canonical_graph(remove_vertex(child, chosen)) == parent_;
}

std::vector<Graph> Augmenter::children() const {
  const int m = parent_.order();
  const Mask all = static_cast<Mask>((1U << m) - 1);
  std::array<int, kMaxVertices> deg{};
  Mask saturated = 0;  // already at max degree
  Mask required = 0;   // must gain the new neighbor to reach the minimum degree
  for (int x = 0; x < m; ++x) {
    deg[x] = parent_.degree(x);
    if (deg[x] >= rules_.max_degree) saturated |= static_cast<Mask>(1U << x);
    if (deg[x] + rules_.remaining < rules_.min_degree) {
      if (deg[x] + 1 + rules_.remaining < rules_.min_degree) return {};
      required |= static_cast<Mask>(1U << x);
    }
  }
  if ((required & saturated) != 0) return {};

  // Subsets in the same orbit under the parent's automorphisms give isomorphic
  // children; keep the smallest member of each orbit.
  const CanonicalLabeling parent_lab = canonical_labeling(parent_);
  const std::size_t subset_count = std::size_t{1} << m;
  std::vector<std::uint32_t> orbit_root;
  if (!parent_lab.automorphisms.empty()) {
    orbit_root.resize(subset_count);
    std::iota(orbit_root.begin(), orbit_root.end(), 0U);
    auto root = [&](std::uint32_t s) {
      while (orbit_root[s] != s) s = orbit_root[s] = orbit_root[orbit_root[s]];
      return s;
    };
    for (const auto& gamma : parent_lab.automorphisms) {
      for (std::uint32_t s = 0; s < subset_count; ++s) {
        std::uint32_t image = 0;
        for (Mask rest = static_cast<Mask>(s); rest != 0; rest &= rest - 1) {
          image |= 1U << gamma[std::countr_zero(rest)];
        }
        const std::uint32_t a = root(s);
        const std::uint32_t b = root(image);
        if (a != b) orbit_root[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::uint32_t s = 0; s < subset_count; ++s) orbit_root[s] = root(s);
  }

  std::vector<Graph> out;
  for (std::uint32_t s = 0; s < subset_count; ++s) {
    const Mask nb = static_cast<Mask>(s);
    if (!orbit_root.empty() && orbit_root[s] != s) continue;
    if (rules_.connected && nb == 0) continue;
    const int new_deg = std::popcount(nb);
    if (new_deg > rules_.max_degree || new_deg + rules_.remaining < rules_.min_degree) continue;
    if ((nb & saturated) != 0 || (required & ~nb & all) != 0) continue;

    Graph::Rows rows = parent_.rows();
    for (Mask rest = nb; rest != 0; rest &= rest - 1) {
      rows[std::countr_zero(rest)] |= static_cast<Mask>(1U << m);
    }
    rows[m] = nb;
    const Graph child = Graph::from_rows_unchecked(m + 1, rows);
    Graph canonical{1};
    if (accept(child, canonical)) out.push_back(canonical);
  }

  std::vector<std::pair<std::array<std::uint64_t, 2>, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(graph6_key(out[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> sorted;
  sorted.reserve(out.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    sorted.push_back(out[keyed[i].second]);
  }
  return sorted;
}

LevelRules rules_for(const GenSpec& spec, int order) {
  return {order, spec.n - order, spec.min_degree, spec.effective_max_degree(),
          spec.connected_only};
}

}  // namespace

Generator::Generator(const GenSpec& spec) : spec_(spec) {
  spec_.validate();
  if (spec_.n == 1) return;
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order < spec_.n; ++order) {
    const LevelRules rules = rules_for(spec_, order);
    std::vector<Graph> next;
    for (const Graph& p : level) {
      auto kids = Augmenter(p, rules).children();
      next.insert(next.end(), kids.begin(), kids.end());
    }
    level = std::move(next);
  }
  parents_ = std::move(level);
}

std::size_t Generator::batch_count() const { return spec_.n == 1 ? 1 : parents_.size(); }

std::vector<Graph> Generator::expand(std::size_t batch) const {
  if (batch >= batch_count()) throw Error("batch index out of range");
  if (spec_.n == 1) {
    if (spec_.min_degree > 0) return {};
    return {Graph(1)};
  }
  const LevelRules rules = rules_for(spec_, spec_.n);
  return Augmenter(parents_[batch], rules).children();
}

void Generator::run(const std::function<void(const Graph&)>& sink,
                    std::size_t first_batch) const {
  for (std::size_t b = first_batch; b < batch_count(); ++b) {
    for (const Graph& g : expand(b)) sink(g);
  }
}

std::string Generator::checkpoint_token(std::size_t next_batch) const {
  std::ostringstream os;
  os << "copnum-gen/1 n=" << spec_.n << " min=" << spec_.min_degree
     << " max=" << spec_.effective_max_degree() << " connected=" << (spec_.connected_only ? 1 : 0)
     << " next=" << next_batch;
  return os.str();
}

std::size_t Generator::resume_batch(const std::string& token) const {
  const std::string prefix = checkpoint_token(0);
  const std::string stem = prefix.substr(0, prefix.size() - 1);  // without the "0"
  if (token.compare(0, stem.size(), stem) != 0) {
    throw Error("checkpoint token does not match this generator: " + token);
  }
  std::size_t next = 0;
  try {
    std::size_t used = 0;
    next = std::stoull(token.substr(stem.size()), &used);
    if (stem.size() + used != token.size()) throw Error("");
  } catch (const std::exception&) {
    throw Error("malformed checkpoint token: " + token);
  }
  if (next > batch_count()) throw Error("checkpoint token beyond the last batch");
  return next;
}

std::vector<Graph> generate(const GenSpec& spec) {
  std::vector<Graph> out;
  generate(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void generate(const GenSpec& spec, const std::function<void(const Graph&)>& sink) {
  Generator(spec).run(sink);
}

std::vector<Graph> brute_force_enumerate(int n) {
  if (n < 1 || n > 7) throw Error("brute-force enumeration supports 1 <= n <= 7");
  std::vector<Edge> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::set<std::array<std::uint64_t, 2>> seen;
  std::vector<Graph> out;
  const std::uint32_t total = 1U << slots.size();
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    Graph::Rows rows{};
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if ((bits >> e) & 1U) {
        rows[slots[e].first] |= static_cast<Mask>(1U << slots[e].second);
        rows[slots[e].second] |= static_cast<Mask>(1U << slots[e].first);
      }
    }
    const Graph g = Graph::from_rows_unchecked(n, rows);
    if (!is_connected(g)) continue;
    const Graph c = canonical_graph(g);
    if (seen.insert(graph6_key(c)).second) out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return graph6_key(a) < graph6_key(b); });
  return out;
}

std::optional<Graph> Graph6Reader::next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      return parse_graph6(text);
    } catch (const Error& e) {
      const std::string message = "line " + std::to_string(line_) + ": " + e.what();
      if (on_error_ == OnError::Fail) throw Error(message);
      ++skipped_;
      messages_.push_back(message);
    }
  }
  return std::nullopt;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  Graph6Reader reader(in);
  std::vector<Graph> out;
  while (auto g = reader.next()) out.push_back(*g);
  return out;
}

}  // namespace copnum
