#include "mgt/runner.hpp"

#include <future>
#include <ostream>
#include <set>

namespace mgt {

void validate_windows(const std::vector<WindowSpec>& windows, bool has_timestamps) {
  std::string bad;
  for (const WindowSpec& w : windows) {
    if (w.kind == WindowSpec::Kind::Timespan && !has_timestamps) {
      if (!bad.empty()) bad += ", ";
      bad += '\'' + w.label + '\'';
    }
  }
  if (!bad.empty())
    throw UnsupportedWindow("window(s) " + bad + " need a timestamped stream");
}

namespace {

std::uint64_t default_report_every(ReportCadence cadence) {
  return cadence == ReportCadence::Timestamps ? 1 : 100000;
}

ReportCadence resolve_cadence(const RunConfig& config, bool has_timestamps) {
  if (config.cadence != ReportCadence::Auto) return config.cadence;
  return has_timestamps ? ReportCadence::Timestamps : ReportCadence::Edges;
}

struct TickTracker {
  ReportCadence cadence;
  std::uint64_t every;
  std::optional<std::int64_t> bucket_end;

  // Called after processing element i (0-based); `next` is the following
  // element, if any. Reports land on the last element of each period.
  bool due(const std::vector<TimedEdge>& edges, std::size_t i) {
    const TimedEdge& cur = edges[i];
    if (i + 1 == edges.size()) return true;
    if (cadence == ReportCadence::Edges) return cur.position % every == 0;
    std::int64_t ts = cur.timestamp.value_or(0);
    if (!bucket_end) {
      std::int64_t first = edges.front().timestamp.value_or(0);
      bucket_end = first + static_cast<std::int64_t>(every) - 1;
    }
    while (ts > *bucket_end) *bucket_end += static_cast<std::int64_t>(every);
    std::int64_t next_ts = edges[i + 1].timestamp.value_or(0);
    return next_ts > *bucket_end;
  }
};

ReportRow estimate_row(const Engine& engine, const WindowSpec& win, const Estimates& est,
                       const ParsedStream& stream, std::uint64_t tau_clamped_total) {
  ReportRow row;
  row.row_type = "estimate";
  row.position = est.at_position;
  row.timestamp = est.at_timestamp;
  row.window = win.label;
  row.wedges = est.wedges_hat;
  row.triangles = est.triangles_hat;
  row.transitivity = est.transitivity_hat;
  row.window_wedges_sampled = est.sampled_window_wedges;
  row.storage = engine.storage_edges();
  row.low_confidence = est.low_confidence;
  row.elist_size = engine.elist_size();
  row.wlist_size = engine.wlist_size();
  row.edges_seen = engine.counters().edges_seen;
  row.duplicates_sampled = engine.counters().duplicates_sampled;
  row.self_loops_skipped = stream.self_loops_skipped;
  row.malformed_skipped = stream.malformed_skipped;
  row.tau_clamped_total = tau_clamped_total;
  return row;
}

}  // namespace

RunResult run_stream(const ParsedStream& stream, const RunConfig& config,
                     std::ostream& out) {
  validate_windows(config.windows, stream.has_timestamps);

  Engine engine(config.params, stream.table, Engine::Options{!config.no_debias});
  engine.counters().self_loops_skipped = stream.self_loops_skipped;

  ReportWriter writer(out, config.format);
  writer.write_header();

  ReportCadence cadence = resolve_cadence(config, stream.has_timestamps);
  TickTracker tick{cadence,
                   config.report_every ? config.report_every : default_report_every(cadence),
                   std::nullopt};

  RunResult result;
  std::uint64_t tau_clamped_total = 0;

  auto emit = [&]() {
    result.final_estimates = estimate_many(engine, config.windows);
    for (std::size_t i = 0; i < config.windows.size(); ++i) {
      const Estimates& est = result.final_estimates[i];
      if (est.tau_clamped) ++tau_clamped_total;
      writer.write(estimate_row(engine, config.windows[i], est, stream, tau_clamped_total));
    }
  };

  for (std::size_t i = 0; i < stream.edges.size(); ++i) {
    engine.process(stream.edges[i]);
    if (tick.due(stream.edges, i)) emit();
  }
  if (stream.edges.empty()) result.final_estimates = estimate_many(engine, config.windows);

  ReportRow summary;
  summary.row_type = "summary";
  summary.position = engine.current_position();
  summary.timestamp = engine.current_timestamp();
  summary.storage = engine.storage_edges();
  summary.elist_size = engine.elist_size();
  summary.wlist_size = engine.wlist_size();
  summary.edges_seen = engine.counters().edges_seen;
  summary.duplicates_sampled = engine.counters().duplicates_sampled;
  summary.self_loops_skipped = stream.self_loops_skipped;
  summary.malformed_skipped = stream.malformed_skipped;
  summary.tau_clamped_total = tau_clamped_total;
  writer.write(summary);

  result.storage = engine.storage_edges();
  result.elist_size = engine.elist_size();
  result.wlist_size = engine.wlist_size();
  result.counters = engine.counters();
  result.tau_clamped_total = tau_clamped_total;
  return result;
}

void run_sweep(const ParsedStream& stream, const SweepConfig& config, std::ostream& out) {
  validate_windows(config.base.windows, stream.has_timestamps);

  std::vector<ExactCounts> exact;
  bool have_exact = stream.edges.size() <= config.oracle_cap;
  if (have_exact)
    for (const WindowSpec& win : config.base.windows)
      exact.push_back(exact_counts(stream.edges, win));

  struct Cell {
    double alpha, beta;
    std::uint64_t repeat;
    Seed seed;
  };
  std::vector<Cell> cells;
  for (double beta : config.betas)
    for (double alpha : config.alphas)
      for (std::uint64_t r = 0; r < config.repeats; ++r)
        cells.push_back(Cell{alpha, beta, r, derive_seed(config.base.params.seed, r)});

  auto run_cell = [&](const Cell& cell) {
    Engine engine(Parameters{cell.alpha, cell.beta, cell.seed}, stream.table,
                  Engine::Options{!config.base.no_debias});
    for (const TimedEdge& e : stream.edges) engine.process(e);
    std::vector<Estimates> ests = estimate_many(engine, config.base.windows);
    std::vector<SweepRow> rows;
    for (std::size_t w = 0; w < config.base.windows.size(); ++w) {
      SweepRow row;
      row.alpha = cell.alpha;
      row.beta = cell.beta;
      row.repeat = cell.repeat;
      row.seed = cell.seed.value;
      row.window = config.base.windows[w].label;
      row.wedges_est = ests[w].wedges_hat;
      row.triangles_est = ests[w].triangles_hat;
      row.transitivity_est = ests[w].transitivity_hat;
      if (have_exact) {
        const ExactCounts& ex = exact[w];
        row.wedges_exact = ex.wedges;
        row.triangles_exact = ex.triangles;
        row.transitivity_exact = ex.transitivity;
        if (ex.wedges > 0)
          row.rel_err_wedges = std::abs(ests[w].wedges_hat - static_cast<double>(ex.wedges)) /
                               static_cast<double>(ex.wedges);
        if (ex.triangles > 0)
          row.rel_err_triangles =
              std::abs(ests[w].triangles_hat - static_cast<double>(ex.triangles)) /
              static_cast<double>(ex.triangles);
        row.abs_err_transitivity = std::abs(ests[w].transitivity_hat - ex.transitivity);
      }
      row.storage = engine.storage_edges();
      row.elist_size = engine.elist_size();
      row.wlist_size = engine.wlist_size();
      rows.push_back(row);
    }
    return rows;
  };

  ReportWriter writer(out, config.base.format);
  writer.write_sweep_header();

  unsigned threads = config.threads == 0 ? 1 : config.threads;
  if (threads <= 1) {
    for (const Cell& cell : cells)
      for (const SweepRow& row : run_cell(cell)) writer.write(row);
    return;
  }
  // Bounded fan-out; results are written in grid order.
  std::vector<std::future<std::vector<SweepRow>>> pending;
  std::size_t next_write = 0;
  auto drain_one = [&]() {
    for (const SweepRow& row : pending[next_write].get()) writer.write(row);
    ++next_write;
  };
  for (const Cell& cell : cells) {
    pending.push_back(std::async(std::launch::async, run_cell, cell));
    if (pending.size() - next_write >= threads) drain_one();
  }
  while (next_write < pending.size()) drain_one();
}

void run_exact(const ParsedStream& stream, const ExactConfig& config, std::ostream& out) {
  if (stream.edges.size() > config.oracle_cap)
    throw InputError("stream has " + std::to_string(stream.edges.size()) +
                     " multiedges, above the oracle cap of " +
                     std::to_string(config.oracle_cap) +
                     " (raise --oracle-cap to force)");
  validate_windows(config.windows, stream.has_timestamps);

  std::uint64_t at = config.at == 0 ? stream.edges.size() : config.at;
  if (at > stream.edges.size())
    throw InputError("--at position " + std::to_string(at) +
                     " is past the end of the stream");

  ReportWriter writer(out, config.format);
  writer.write_header();
  std::optional<std::int64_t> at_ts;
  if (at > 0) at_ts = stream.edges[at - 1].timestamp;
  for (const WindowSpec& win : config.windows) {
    ExactCounts counts = exact_counts(stream.edges, win, at);
    ReportRow row;
    row.row_type = "exact";
    row.position = at;
    row.timestamp = at_ts;
    row.window = win.label;
    row.wedges = static_cast<double>(counts.wedges);
    row.triangles = static_cast<double>(counts.triangles);
    row.transitivity = counts.transitivity;
    row.graph_edges = counts.edges;
    row.graph_vertices = counts.vertices;
    row.self_loops_skipped = stream.self_loops_skipped;
    row.malformed_skipped = stream.malformed_skipped;
    writer.write(row);
  }
}

std::vector<TimedEdge> run_generate(const ParsedStream& input, const GenerateConfig& config,
                                    std::ostream& out) {
  std::set<EdgeKey> simple;
  for (const TimedEdge& e : input.edges) simple.insert(e.edge);
  std::vector<TimedEdge> stream = synthesize_multigraph(simple, config.replication,
                                                        config.seed);
  write_edge_stream(out, input.table, stream);
  return stream;
}

}  // namespace mgt
