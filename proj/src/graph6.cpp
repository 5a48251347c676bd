#include "crossing/graph6.hpp"

#include <cstdint>

namespace crossing {
namespace {

constexpr int kOffset = 63;

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kOffset));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kOffset));
  }
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kOffset;
  if (value < 0 || value > 63) throw Graph6Error(std::string("invalid graph6 byte '") + c + "'");
  return value;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  append_size(out, n);
  int bits = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(bits + kOffset));
        bits = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((bits << (6 - filled)) + kOffset));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw Graph6Error("truncated graph6 size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 8;
  } else {
    if (text.size() < 4) throw Graph6Error("truncated graph6 size field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 4;
  }
  if (n > 1'000'000) throw Graph6Error("graph6 vertex count too large");

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (pairs + 5) / 6;
  if (text.size() - pos != bytes) {
    throw Graph6Error("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                      std::to_string(bytes));
  }

  std::vector<Edge> edges;
  std::uint64_t bit_index = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++bit_index) {
      const int byte = sextet(text[pos + bit_index / 6]);
      if ((byte >> (5 - bit_index % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; bit_index < bytes * 6; ++bit_index) {
    const int byte = sextet(text[pos + bit_index / 6]);
    if ((byte >> (5 - bit_index % 6)) & 1) throw Graph6Error("nonzero graph6 padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace crossing
