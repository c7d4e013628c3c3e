#include "mgt/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mgt {

ExactCounts exact_counts(std::span<const TimedEdge> stream, const WindowSpec& win,
                         std::uint64_t at) {
  if (at > stream.size())
    throw std::invalid_argument("query position past the end of the stream");

  struct LastSeen {
    std::uint64_t position = 0;
    std::optional<std::int64_t> timestamp;
  };
  std::unordered_map<EdgeKey, LastSeen, EdgeKeyHash> last;
  last.reserve(at);
  std::optional<std::int64_t> current_ts;
  for (std::uint64_t i = 0; i < at; ++i) {
    const TimedEdge& e = stream[i];
    last[e.edge] = LastSeen{e.position, e.timestamp};
    current_ts = e.timestamp;
  }

  std::uint64_t min_position = 1;
  std::optional<std::int64_t> min_timestamp;
  switch (win.kind) {
    case WindowSpec::Kind::AllHistory:
      break;
    case WindowSpec::Kind::LastEdges:
      min_position = at >= win.edge_count ? at - win.edge_count + 1 : 1;
      break;
    case WindowSpec::Kind::Timespan:
      if (!current_ts)
        throw UnsupportedWindow("window '" + win.label + "' needs a timestamped stream");
      min_timestamp = *current_ts - win.span + 1;
      break;
  }

  std::unordered_map<VertexId, std::vector<VertexId>> adj;
  std::uint64_t edge_count = 0;
  for (const auto& [edge, seen] : last) {
    if (seen.position < min_position) continue;
    if (min_timestamp && (!seen.timestamp || *seen.timestamp < *min_timestamp)) continue;
    adj[edge.u].push_back(edge.v);
    adj[edge.v].push_back(edge.u);
    ++edge_count;
  }

  ExactCounts counts;
  counts.edges = edge_count;
  counts.vertices = adj.size();
  for (auto& [v, neighbors] : adj) {
    std::sort(neighbors.begin(), neighbors.end());
    std::uint64_t d = neighbors.size();
    counts.wedges += d * (d - 1) / 2;
  }

  // Each triangle {a<b<c} is counted at edge (a,b) with common neighbor c>b.
  for (const auto& [v, neighbors] : adj) {
    for (VertexId w : neighbors) {
      if (w <= v) continue;
      const auto& nv = adj.at(v);
      const auto& nw = adj.at(w);
      auto it_v = std::lower_bound(nv.begin(), nv.end(), w + 1);
      auto it_w = std::lower_bound(nw.begin(), nw.end(), w + 1);
      while (it_v != nv.end() && it_w != nw.end()) {
        if (*it_v < *it_w) {
          ++it_v;
        } else if (*it_w < *it_v) {
          ++it_w;
        } else {
          ++counts.triangles;
          ++it_v;
          ++it_w;
        }
      }
    }
  }

  if (counts.wedges > 0)
    counts.transitivity = 3.0 * static_cast<double>(counts.triangles) /
                          static_cast<double>(counts.wedges);
  return counts;
}

}  // namespace mgt
