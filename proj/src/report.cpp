#include "mgt/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace mgt {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

constexpr const char* kRunHeader =
    "row,position,timestamp,window,wedges,triangles,transitivity,"
    "window_wedges_sampled,storage,low_confidence,elist_size,wlist_size,"
    "graph_edges,graph_vertices,edges_seen,duplicates_sampled,"
    "self_loops_skipped,malformed_skipped,tau_clamped_total";

constexpr const char* kSweepHeader =
    "alpha,beta,repeat,seed,window,wedges_est,triangles_est,transitivity_est,"
    "wedges_exact,triangles_exact,transitivity_exact,rel_err_wedges,"
    "rel_err_triangles,abs_err_transitivity,storage,elist_size,wlist_size";

template <typename T>
void csv_cell(std::string& line, const std::optional<T>& v) {
  line.push_back(',');
  if (!v) return;
  if constexpr (std::is_same_v<T, double>) {
    line += format_double(*v);
  } else if constexpr (std::is_same_v<T, bool>) {
    line += *v ? '1' : '0';
  } else if constexpr (std::is_same_v<T, std::string>) {
    line += *v;  // labels come from the window grammar, no quoting needed
  } else {
    line += std::to_string(*v);
  }
}

template <typename T>
nlohmann::json json_cell(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

void ReportWriter::write_header() {
  if (format_ == ReportFormat::Csv) out_ << kRunHeader << '\n';
}

void ReportWriter::write(const ReportRow& row) {
  if (format_ == ReportFormat::Csv) {
    std::string line = row.row_type;
    line += ',' + std::to_string(row.position);
    csv_cell(line, row.timestamp);
    csv_cell(line, row.window);
    csv_cell(line, row.wedges);
    csv_cell(line, row.triangles);
    csv_cell(line, row.transitivity);
    csv_cell(line, row.window_wedges_sampled);
    csv_cell(line, row.storage);
    csv_cell(line, row.low_confidence);
    csv_cell(line, row.elist_size);
    csv_cell(line, row.wlist_size);
    csv_cell(line, row.graph_edges);
    csv_cell(line, row.graph_vertices);
    csv_cell(line, row.edges_seen);
    csv_cell(line, row.duplicates_sampled);
    csv_cell(line, row.self_loops_skipped);
    csv_cell(line, row.malformed_skipped);
    csv_cell(line, row.tau_clamped_total);
    out_ << line << '\n';
  } else {
    nlohmann::ordered_json j;
    j["row"] = row.row_type;
    j["position"] = row.position;
    j["timestamp"] = json_cell(row.timestamp);
    j["window"] = json_cell(row.window);
    j["wedges"] = json_cell(row.wedges);
    j["triangles"] = json_cell(row.triangles);
    j["transitivity"] = json_cell(row.transitivity);
    j["window_wedges_sampled"] = json_cell(row.window_wedges_sampled);
    j["storage"] = json_cell(row.storage);
    j["low_confidence"] = json_cell(row.low_confidence);
    j["elist_size"] = json_cell(row.elist_size);
    j["wlist_size"] = json_cell(row.wlist_size);
    j["graph_edges"] = json_cell(row.graph_edges);
    j["graph_vertices"] = json_cell(row.graph_vertices);
    j["edges_seen"] = json_cell(row.edges_seen);
    j["duplicates_sampled"] = json_cell(row.duplicates_sampled);
    j["self_loops_skipped"] = json_cell(row.self_loops_skipped);
    j["malformed_skipped"] = json_cell(row.malformed_skipped);
    j["tau_clamped_total"] = json_cell(row.tau_clamped_total);
    out_ << j.dump() << '\n';
  }
}

void ReportWriter::write_sweep_header() {
  if (format_ == ReportFormat::Csv) out_ << kSweepHeader << '\n';
}

void ReportWriter::write(const SweepRow& row) {
  if (format_ == ReportFormat::Csv) {
    std::string line = format_double(row.alpha);
    line += ',' + format_double(row.beta);
    line += ',' + std::to_string(row.repeat);
    line += ',' + std::to_string(row.seed);
    line += ',' + row.window;
    line += ',' + format_double(row.wedges_est);
    line += ',' + format_double(row.triangles_est);
    line += ',' + format_double(row.transitivity_est);
    csv_cell(line, row.wedges_exact);
    csv_cell(line, row.triangles_exact);
    csv_cell(line, row.transitivity_exact);
    csv_cell(line, row.rel_err_wedges);
    csv_cell(line, row.rel_err_triangles);
    csv_cell(line, row.abs_err_transitivity);
    line += ',' + std::to_string(row.storage);
    line += ',' + std::to_string(row.elist_size);
    line += ',' + std::to_string(row.wlist_size);
    out_ << line << '\n';
  } else {
    nlohmann::ordered_json j;
    j["alpha"] = row.alpha;
    j["beta"] = row.beta;
    j["repeat"] = row.repeat;
    j["seed"] = row.seed;
    j["window"] = row.window;
    j["wedges_est"] = row.wedges_est;
    j["triangles_est"] = row.triangles_est;
    j["transitivity_est"] = row.transitivity_est;
    j["wedges_exact"] = json_cell(row.wedges_exact);
    j["triangles_exact"] = json_cell(row.triangles_exact);
    j["transitivity_exact"] = json_cell(row.transitivity_exact);
    j["rel_err_wedges"] = json_cell(row.rel_err_wedges);
    j["rel_err_triangles"] = json_cell(row.rel_err_triangles);
    j["abs_err_transitivity"] = json_cell(row.abs_err_transitivity);
    j["storage"] = row.storage;
    j["elist_size"] = row.elist_size;
    j["wlist_size"] = row.wlist_size;
    out_ << j.dump() << '\n';
  }
}

}  // namespace mgt
