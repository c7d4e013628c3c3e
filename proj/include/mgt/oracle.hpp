#pragma once
// Ground truth by enumeration: deduplicate the (windowed) stream prefix
// and count wedges and triangles exactly. Window membership uses the same
// latest-occurrence rule as the estimator, so both answer the same
// question about the same graph.

#include <cstdint>
#include <span>
#include <vector>

#include "mgt/stream.hpp"
#include "mgt/window.hpp"

namespace mgt {

struct ExactCounts {
  std::uint64_t wedges = 0;
  std::uint64_t triangles = 0;
  double transitivity = 0.0;  // 3 T / W, 0 when W is 0
  std::uint64_t edges = 0;
  std::uint64_t vertices = 0;
};

// Counts over the simple graph of edges whose last occurrence within
// positions 1..at falls inside the window. Triangles are counted by
// sorted-adjacency intersection, each exactly once.
ExactCounts exact_counts(std::span<const TimedEdge> stream, const WindowSpec& win,
                         std::uint64_t at);

inline ExactCounts exact_counts(std::span<const TimedEdge> stream, const WindowSpec& win) {
  return exact_counts(stream, win, stream.size());
}

}  // namespace mgt
