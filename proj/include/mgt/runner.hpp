#pragma once
// Drives whole commands over a parsed stream: single-pass estimation with
// periodic multi-window reports, (alpha, beta) convergence sweeps, exact
// ground truth, and synthetic multigraph generation. The CLI binary is a
// thin wrapper over these.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mgt/engine.hpp"
#include "mgt/oracle.hpp"
#include "mgt/report.hpp"
#include "mgt/stream.hpp"
#include "mgt/window.hpp"

namespace mgt {

enum class ReportCadence { Auto, Edges, Timestamps };

struct RunConfig {
  Parameters params;
  std::vector<WindowSpec> windows = {WindowSpec::all_history()};
  ReportCadence cadence = ReportCadence::Auto;
  // 0 picks the default: every 100000 edges, or every timestamp unit when
  // the stream is timestamped.
  std::uint64_t report_every = 0;
  bool no_debias = false;
  ReportFormat format = ReportFormat::Csv;
};

struct RunResult {
  std::vector<Estimates> final_estimates;  // one per window
  std::uint64_t storage = 0;
  std::uint64_t elist_size = 0;
  std::uint64_t wlist_size = 0;
  Counters counters;
  std::uint64_t tau_clamped_total = 0;
};

// Throws UnsupportedWindow naming every window the stream cannot answer.
void validate_windows(const std::vector<WindowSpec>& windows, bool has_timestamps);

// Processes the stream once, emitting one estimate row per window at each
// report tick (and at end of stream), then a summary row with counters.
RunResult run_stream(const ParsedStream& stream, const RunConfig& config,
                     std::ostream& out);

struct SweepConfig {
  RunConfig base;
  std::vector<double> alphas;
  std::vector<double> betas;
  std::uint64_t repeats = 1;
  std::uint64_t oracle_cap = 2'000'000;  // multiedges; beyond it, no exact columns
  unsigned threads = 1;
};

// One engine run to completion per (alpha, beta, repeat); repeat r uses a
// sub-seed derived from the base seed, shared across the grid so curves
// over alpha are coupled. Rows come out in grid order regardless of
// thread count.
void run_sweep(const ParsedStream& stream, const SweepConfig& config, std::ostream& out);

struct ExactConfig {
  std::vector<WindowSpec> windows = {WindowSpec::all_history()};
  std::uint64_t at = 0;  // 0 means end of stream
  std::uint64_t oracle_cap = 2'000'000;
  ReportFormat format = ReportFormat::Csv;
};

void run_exact(const ParsedStream& stream, const ExactConfig& config, std::ostream& out);

struct GenerateConfig {
  ReplicationConfig replication;
  Seed seed{0};
};

// Deduplicates the input to its simple edge set, replicates and permutes,
// and writes the standard edge-list format.
std::vector<TimedEdge> run_generate(const ParsedStream& input, const GenerateConfig& config,
                                    std::ostream& out);

}  // namespace mgt
