#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "copnum/graph.hpp"

namespace copnum {

enum class Graph6Error {
  Empty,             // no bytes at all
  MalformedLength,   // size byte not a single-byte order in 63..126
  InvalidCharacter,  // data byte outside 63..126
  WrongByteCount,    // data length disagrees with the order
  NonzeroPadding,    // bits after the last edge bit are set
  OrderOutOfRange,   // order 0 or above kMaxVertices
};

const char* to_string(Graph6Error e);

class Graph6ParseError : public Error {
 public:
  Graph6ParseError(Graph6Error kind, const std::string& detail);
  Graph6Error kind() const noexcept { return kind_; }

 private:
  Graph6Error kind_;
};

/// Header-less graph6. Trailing '\n' / '\r' are tolerated.
Graph parse_graph6(std::string_view text);

/// Header-less graph6 without a line terminator.
std::string to_graph6(const Graph& g);

/// "n m" then m lines "u v" with 0-based endpoints.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace copnum
