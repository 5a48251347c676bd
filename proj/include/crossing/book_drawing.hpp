#pragma once

#include <cstdint>

#include "crossing/certificate.hpp"
#include "crossing/graph.hpp"

namespace crossing {

struct BookDrawingOptions {
  int restarts = 6;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Upper-bound drawing: vertices on a line, every edge a half-circle above or
/// below it. Vertex order and page assignment are improved by local search
/// from several seeded starts. Always returns a verified certificate.
DrawingCertificate book_drawing(const Graph& g, const BookDrawingOptions& options = {});

}  // namespace crossing
