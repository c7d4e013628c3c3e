#pragma once
// Report rows shared by the run/exact/sweep commands. One fixed column
// set per command, CSV with a header row or line-delimited JSON, both
// parseable without lookahead.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "mgt/oracle.hpp"
#include "mgt/window.hpp"

namespace mgt {

enum class ReportFormat { Csv, JsonLines };

// Column set for run and exact: estimate rows fill the estimate columns,
// exact rows the exact graph columns, the summary row the counters.
struct ReportRow {
  std::string row_type;  // "estimate" | "exact" | "summary"
  std::uint64_t position = 0;
  std::optional<std::int64_t> timestamp;
  std::optional<std::string> window;
  std::optional<double> wedges;
  std::optional<double> triangles;
  std::optional<double> transitivity;
  std::optional<std::uint64_t> window_wedges_sampled;
  std::optional<std::uint64_t> storage;
  std::optional<bool> low_confidence;
  std::optional<std::uint64_t> elist_size;
  std::optional<std::uint64_t> wlist_size;
  std::optional<std::uint64_t> graph_edges;
  std::optional<std::uint64_t> graph_vertices;
  std::optional<std::uint64_t> edges_seen;
  std::optional<std::uint64_t> duplicates_sampled;
  std::optional<std::uint64_t> self_loops_skipped;
  std::optional<std::uint64_t> malformed_skipped;
  std::optional<std::uint64_t> tau_clamped_total;
};

struct SweepRow {
  double alpha = 0.0;
  double beta = 0.0;
  std::uint64_t repeat = 0;
  std::uint64_t seed = 0;
  std::string window;
  double wedges_est = 0.0;
  double triangles_est = 0.0;
  double transitivity_est = 0.0;
  std::optional<std::uint64_t> wedges_exact;
  std::optional<std::uint64_t> triangles_exact;
  std::optional<double> transitivity_exact;
  std::optional<double> rel_err_wedges;
  std::optional<double> rel_err_triangles;
  std::optional<double> abs_err_transitivity;
  std::uint64_t storage = 0;
  std::uint64_t elist_size = 0;
  std::uint64_t wlist_size = 0;
};

class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportFormat format) : out_(out), format_(format) {}

  void write_header();
  void write(const ReportRow& row);

  void write_sweep_header();
  void write(const SweepRow& row);

 private:
  std::ostream& out_;
  ReportFormat format_;
};

// Deterministic number rendering used in every report.
std::string format_double(double v);

}  // namespace mgt
