#include "zf/graph6.hpp"

#include <cstddef>
#include <vector>

#include "zf/errors.hpp"

namespace zf {

namespace {

constexpr int kOffset = 63;
constexpr int kLongHeader = 126;

std::size_t body_bytes(int n) {
  const std::size_t bits =
      static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kLongHeader));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  } else {
    throw Error(Errc::BadParameter, "graph too large for this encoder");
  }
  if (n < 2) return out;

  int buffer = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      buffer = (buffer << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(buffer + kOffset));
        buffer = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((buffer << (6 - filled)) + kOffset));
  return out;
}

Graph decode_graph6(const std::string& text) {
  for (unsigned char b : text)
    if (b < kOffset || b > kLongHeader)
      throw Error(Errc::NonPrintableByte,
                  "byte " + std::to_string(static_cast<int>(b)) +
                      " outside the graph6 range");
  if (text.empty()) throw Error(Errc::MalformedHeader, "empty input");

  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(text[0]) == kLongHeader) {
    // 126 126 introduces the 36-bit form, which this decoder does not
    // accept; a bare 126 needs three size bytes.
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kLongHeader)
      throw Error(Errc::MalformedHeader, "36-bit size header not supported");
    if (text.size() < 4)
      throw Error(Errc::MalformedHeader, "incomplete long-form size header");
    n = ((text[1] - kOffset) << 12) | ((text[2] - kOffset) << 6) |
        (text[3] - kOffset);
    pos = 4;
  } else {
    n = text[0] - kOffset;
    pos = 1;
  }

  const std::size_t expected = n >= 2 ? body_bytes(n) : 0;
  if (text.size() - pos != expected)
    throw Error(Errc::TruncatedBitVector,
                "expected " + std::to_string(expected) + " adjacency bytes, " +
                    "got " + std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  int buffer = 0;
  int remaining = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (remaining == 0) {
        buffer = text[pos++] - kOffset;
        remaining = 6;
      }
      --remaining;
      if ((buffer >> remaining) & 1) edges.emplace_back(row, col);
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace zf
