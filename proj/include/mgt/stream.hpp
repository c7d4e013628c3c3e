#pragma once
// Edge-stream ingestion and synthetic multigraph construction.
//
// Input format: line-oriented UTF-8 text, one record per line. A record
// is "u v" or "u v ts" with whitespace or comma separators; '#' or '%'
// in column 0 marks a comment. Vertex labels are arbitrary non-whitespace
// tokens; ts is a signed 64-bit integer. Either every record has a
// timestamp or none does, and timestamps must be non-decreasing.

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mgt/hashing.hpp"

namespace mgt {

// Maps arbitrary vertex labels to dense ids and back. Label views stay
// valid for the table's lifetime. Hashing works on labels, bookkeeping on
// ids, so sampling decisions never depend on arrival order.
class VertexTable {
 public:
  VertexId intern(std::string_view label);
  std::optional<VertexId> find(std::string_view label) const;
  std::string_view label(VertexId id) const { return labels_[id]; }
  std::size_t size() const { return labels_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return static_cast<std::size_t>(hash_bytes(s, 0));
    }
  };
  std::unordered_map<std::string_view, VertexId, Hash, std::equal_to<>> ids_;
  std::deque<std::string> labels_;  // deque keeps handed-out views stable
};

// One multigraph stream element.
struct TimedEdge {
  EdgeKey edge;
  std::uint64_t position = 0;  // 1-based, strictly increasing
  std::optional<std::int64_t> timestamp;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  std::size_t line;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StreamFormat { Auto, Plain, Timestamped };

// A parsed stream plus the label table it was interned against.
struct ParsedStream {
  VertexTable table;
  std::vector<TimedEdge> edges;
  bool has_timestamps = false;
  std::uint64_t self_loops_skipped = 0;
  std::uint64_t malformed_skipped = 0;
};

// Reads records until EOF. Malformed lines and self-loops are counted and
// skipped; mixed timestamp arity and non-monotone timestamps are hard
// errors naming the offending line.
ParsedStream parse_edge_stream(std::istream& in, StreamFormat format = StreamFormat::Auto);
ParsedStream parse_edge_stream_file(const std::string& path,
                                    StreamFormat format = StreamFormat::Auto);

// Writes the standard edge-list format (labels, optional timestamp).
void write_edge_stream(std::ostream& out, const VertexTable& table,
                       const std::vector<TimedEdge>& edges);

// Replication protocol for synthetic multigraphs: each simple edge is
// kept once with probability 1-p, or repeated r times with probability p,
// r drawn uniformly from `counts`. The result is uniformly permuted.
struct ReplicationConfig {
  double probability = 1.0 / 3.0;
  std::vector<std::uint32_t> counts = {2, 4, 8, 16, 32};
};

std::vector<TimedEdge> synthesize_multigraph(const std::set<EdgeKey>& simple_edges,
                                             const ReplicationConfig& cfg, Seed seed);

// Seeded Fisher-Yates permutation; positions reassigned 1..m. Refuses
// timestamped streams (reordering would break monotonicity).
std::vector<TimedEdge> permute_stream(std::vector<TimedEdge> stream, Seed seed);

}  // namespace mgt
