#include "mgt/stream.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace mgt {

VertexId VertexTable::intern(std::string_view label) {
  if (auto it = ids_.find(label); it != ids_.end()) return it->second;
  labels_.emplace_back(label);
  VertexId id = labels_.size() - 1;
  ids_.emplace(std::string_view{labels_.back()}, id);
  return id;
}

std::optional<VertexId> VertexTable::find(std::string_view label) const {
  if (auto it = ids_.find(label); it != ids_.end()) return it->second;
  return std::nullopt;
}

namespace {

// Splits on runs of spaces/tabs and on commas. \r from CRLF input is
// treated as trailing whitespace.
std::size_t tokenize(std::string_view line, std::string_view out[3]) {
  std::size_t count = 0;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (count == 3) return 4;  // too many fields
    out[count++] = line.substr(start, i - start);
  }
  return count;
}

std::optional<std::int64_t> parse_ts(std::string_view tok) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace

ParsedStream parse_edge_stream(std::istream& in, StreamFormat format) {
  ParsedStream result;
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t position = 0;
  std::optional<bool> timestamped;  // decided by the first record (or forced)
  if (format == StreamFormat::Plain) timestamped = false;
  if (format == StreamFormat::Timestamped) timestamped = true;
  std::optional<std::int64_t> prev_ts;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#' || line[0] == '%') continue;
    std::string_view tok[3];
    std::size_t n = tokenize(line, tok);
    if (n == 0) continue;  // whitespace-only line
    if (n != 2 && n != 3) {
      ++result.malformed_skipped;
      continue;
    }
    bool has_ts = (n == 3);
    if (!timestamped.has_value()) {
      timestamped = has_ts;
    } else if (*timestamped != has_ts) {
      throw ParseError(line_no, has_ts ? "unexpected timestamp field"
                                       : "missing timestamp field");
    }
    std::optional<std::int64_t> ts;
    if (has_ts) {
      ts = parse_ts(tok[2]);
      if (!ts) {
        ++result.malformed_skipped;
        continue;
      }
      if (prev_ts && *ts < *prev_ts)
        throw ParseError(line_no, "timestamps must be non-decreasing");
    }
    if (tok[0] == tok[1]) {
      ++result.self_loops_skipped;
      continue;
    }
    if (has_ts) prev_ts = ts;
    VertexId u = result.table.intern(tok[0]);
    VertexId v = result.table.intern(tok[1]);
    result.edges.push_back(TimedEdge{canonical_edge(u, v), ++position, ts});
  }
  if (in.bad()) throw InputError("error reading input stream");
  result.has_timestamps = timestamped.value_or(false) && !result.edges.empty();
  return result;
}

ParsedStream parse_edge_stream_file(const std::string& path, StreamFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  return parse_edge_stream(in, format);
}

void write_edge_stream(std::ostream& out, const VertexTable& table,
                       const std::vector<TimedEdge>& edges) {
  for (const TimedEdge& e : edges) {
    out << table.label(e.edge.u) << ' ' << table.label(e.edge.v);
    if (e.timestamp) out << ' ' << *e.timestamp;
    out << '\n';
  }
}

std::vector<TimedEdge> synthesize_multigraph(const std::set<EdgeKey>& simple_edges,
                                             const ReplicationConfig& cfg, Seed seed) {
  if (cfg.probability < 0.0 || cfg.probability > 1.0)
    throw std::invalid_argument("replication probability must be in [0,1]");
  if (cfg.counts.empty())
    throw std::invalid_argument("replication count set must be non-empty");
  SplitMix64 rng(mix64(seed.value ^ 0x6d756c7469ULL));
  std::vector<TimedEdge> stream;
  stream.reserve(simple_edges.size());
  for (const EdgeKey& e : simple_edges) {
    std::uint32_t copies = 1;
    if (rng.next_unit() < cfg.probability)
      copies = cfg.counts[rng.bounded(cfg.counts.size())];
    for (std::uint32_t i = 0; i < copies; ++i)
      stream.push_back(TimedEdge{e, 0, std::nullopt});
  }
  return permute_stream(std::move(stream), seed);
}

std::vector<TimedEdge> permute_stream(std::vector<TimedEdge> stream, Seed seed) {
  for (const TimedEdge& e : stream)
    if (e.timestamp)
      throw std::invalid_argument(
          "cannot permute a timestamped stream: reordering would violate "
          "timestamp monotonicity");
  SplitMix64 rng(mix64(seed.value ^ 0x7065726d75746532ULL));
  for (std::size_t i = stream.size(); i > 1; --i)
    std::swap(stream[i - 1], stream[rng.bounded(i)]);
  for (std::size_t i = 0; i < stream.size(); ++i) stream[i].position = i + 1;
  return stream;
}

}  // namespace mgt
