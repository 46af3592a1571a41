#include "copnum/graph6.hpp"

#include <istream>
#include <ostream>
#include <vector>

namespace copnum {

const char* to_string(Graph6Error e) {
  switch (e) {
    case Graph6Error::Empty: return "empty input";
    case Graph6Error::MalformedLength: return "malformed length byte";
    case Graph6Error::InvalidCharacter: return "character outside 63..126";
    case Graph6Error::WrongByteCount: return "wrong number of data bytes";
    case Graph6Error::NonzeroPadding: return "nonzero padding bits";
    case Graph6Error::OrderOutOfRange: return "order outside supported range";
  }
  return "unknown graph6 error";
}

Graph6ParseError::Graph6ParseError(Graph6Error kind, const std::string& detail)
    : Error(std::string("graph6: ") + to_string(kind) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind) {}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6ParseError(Graph6Error::Empty, "");

  const auto size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte < 63 || size_byte > 126) {
    throw Graph6ParseError(Graph6Error::MalformedLength,
                           "byte " + std::to_string(size_byte));
  }
  if (size_byte == 126) {
    // Multi-byte orders (>= 63) are well-formed graph6 but exceed capacity.
    throw Graph6ParseError(Graph6Error::OrderOutOfRange, "order >= 63");
  }
  const int n = size_byte - 63;
  if (n < 1 || n > kMaxVertices) {
    throw Graph6ParseError(Graph6Error::OrderOutOfRange, "order " + std::to_string(n));
  }

  const std::string_view data = text.substr(1);
  for (char c : data) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw Graph6ParseError(Graph6Error::InvalidCharacter, "byte " + std::to_string(b));
    }
  }
  const int bit_count = n * (n - 1) / 2;
  const int byte_count = (bit_count + 5) / 6;
  if (static_cast<int>(data.size()) != byte_count) {
    throw Graph6ParseError(Graph6Error::WrongByteCount,
                           "expected " + std::to_string(byte_count) + ", got " +
                               std::to_string(data.size()));
  }

  Graph::Rows rows{};
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = static_cast<unsigned char>(data[k / 6]) - 63;
      if ((chunk >> (5 - k % 6)) & 1) {
        rows[i] |= static_cast<std::uint16_t>(1U << j);
        rows[j] |= static_cast<std::uint16_t>(1U << i);
      }
    }
  }
  for (; k < byte_count * 6; ++k) {
    const int chunk = static_cast<unsigned char>(data[k / 6]) - 63;
    if ((chunk >> (5 - k % 6)) & 1) throw Graph6ParseError(Graph6Error::NonzeroPadding, "");
  }
  return Graph::from_rows_unchecked(n, rows);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > 62) throw Error("graph6: order not encodable in one byte");
  const int bit_count = n * (n - 1) / 2;
  std::string out(1 + (bit_count + 5) / 6, '\0');
  out[0] = static_cast<char>(n + 63);
  int k = 0;
  int chunk = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (k % 6 == 5) {
        out[1 + k / 6] = static_cast<char>(chunk + 63);
        chunk = 0;
      }
    }
  }
  if (k % 6 != 0) out[1 + k / 6] = static_cast<char>((chunk << (6 - k % 6)) + 63);
  return out;
}

Graph read_edge_list(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m)) throw Error("edge list: expected header \"n m\"");
  if (m < 0) throw Error("edge list: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) {
      throw Error("edge list: expected " + std::to_string(m) + " edges, got " +
                  std::to_string(e));
    }
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace copnum
