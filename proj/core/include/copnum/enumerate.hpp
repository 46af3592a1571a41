#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

struct GenSpec {
  int n = 1;
  int min_degree = 0;
  int max_degree = -1;  // -1 means n-1
  bool connected_only = true;

  int effective_max_degree() const { return max_degree < 0 ? n - 1 : max_degree; }
  /// Throws Error unless 1 <= n <= kMaxVertices and 0 <= min <= max <= n-1.
  void validate() const;
};

/// Isomorph-free generation by canonical vertex augmentation.
///
/// Graphs of order n are produced by adding one vertex to each representative
/// of order n-1 (the "parents") and keeping a child only when its new vertex is
/// the canonically chosen deletion vertex: among the eligible vertices (non-cut
/// vertices when connected_only) those of maximal (degree, neighbor-degree sum),
/// then the one with the highest canonical position, up to equivalence of the
/// deleted graphs. Children of one parent are deduplicated by canonical form and
/// emitted in ascending graph6 order; parents come in their own emission order,
/// so the whole stream is deterministic.
///
/// The final level is split into batches, one per parent, that can be expanded
/// independently and concurrently.
class Generator {
 public:
  explicit Generator(const GenSpec& spec);

  const GenSpec& spec() const { return spec_; }
  std::size_t batch_count() const;
  /// Graphs of batch i in emission order. Thread-safe.
  std::vector<Graph> expand(std::size_t batch) const;
  /// Streams every graph, starting at `first_batch`.
  void run(const std::function<void(const Graph&)>& sink, std::size_t first_batch = 0) const;

  /// Opaque, versioned resume point: "copnum-gen/1 n=.. min=.. max=.. connected=.. next=..".
  std::string checkpoint_token(std::size_t next_batch) const;
  /// Batch index encoded by a token produced for the same spec. Throws Error.
  std::size_t resume_batch(const std::string& token) const;

 private:
  GenSpec spec_;
  std::vector<Graph> parents_;  // representatives of order n-1
};

std::vector<Graph> generate(const GenSpec& spec);
void generate(const GenSpec& spec, const std::function<void(const Graph&)>& sink);

/// Every connected class of order n (n <= 7) by filtering all labeled graphs
/// and deduplicating by canonical form; ascending graph6 of the canonical graph.
std::vector<Graph> brute_force_enumerate(int n);

/// Newline-delimited graph6 reader.
class Graph6Reader {
 public:
  enum class OnError { Fail, Skip };

  explicit Graph6Reader(std::istream& in, OnError on_error = OnError::Fail)
      : in_(in), on_error_(on_error) {}

  /// Next graph; nullopt at end of input. In Fail mode a malformed line throws
  /// Error with "line N:" prefix; in Skip mode it is counted and skipped.
  std::optional<Graph> next();
  /// Line number of the last line read (1-based).
  std::size_t line() const { return line_; }
  std::size_t skipped() const { return skipped_; }
  const std::vector<std::string>& skip_messages() const { return messages_; }

 private:
  std::istream& in_;
  OnError on_error_;
  std::size_t line_ = 0;
  std::size_t skipped_ = 0;
  std::vector<std::string> messages_;
};

std::vector<Graph> read_graph6_stream(std::istream& in);

/// Orders graphs of equal order exactly like their graph6 strings.
std::array<std::uint64_t, 2> graph6_key(const Graph& g);

}  // namespace copnum
