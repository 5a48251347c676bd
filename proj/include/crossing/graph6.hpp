#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "crossing/graph.hpp"

namespace crossing {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Encodes in graph6: size prefix N(n) followed by the upper triangle of the
/// adjacency matrix, column by column, packed six bits per printable byte.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 record. An optional ">>graph6<<" header and trailing
/// newline are accepted; anything else malformed throws Graph6Error.
Graph from_graph6(std::string_view text);

}  // namespace crossing
