// mg-triangle: single-pass triangle, wedge, and transitivity estimation
// over multigraph edge streams, with simultaneous sliding-window queries.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mgt/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnsupportedWindow = 3;

mgt::Seed resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return mgt::Seed{*flag};
  if (const char* env = std::getenv("MG_TRIANGLE_SEED")) {
    try {
      return mgt::Seed{std::stoull(env)};
    } catch (const std::exception&) {
      throw std::invalid_argument("MG_TRIANGLE_SEED is not a valid integer: " +
                                  std::string(env));
    }
  }
  return mgt::Seed{1};
}

mgt::StreamFormat parse_format(const std::string& text) {
  if (text == "auto") return mgt::StreamFormat::Auto;
  if (text == "plain") return mgt::StreamFormat::Plain;
  if (text == "timestamped") return mgt::StreamFormat::Timestamped;
  throw std::invalid_argument("bad --format '" + text +
                              "' (expected auto | plain | timestamped)");
}

// "<n>" (unit chosen by the stream), "edges:<n>", or "ts:<n>".
void parse_report_every(const std::string& text, mgt::RunConfig& config) {
  std::string value = text;
  if (text.rfind("edges:", 0) == 0) {
    config.cadence = mgt::ReportCadence::Edges;
    value = text.substr(6);
  } else if (text.rfind("ts:", 0) == 0) {
    config.cadence = mgt::ReportCadence::Timestamps;
    value = text.substr(3);
  }
  try {
    std::size_t used = 0;
    config.report_every = std::stoull(value, &used);
    if (used != value.size() || config.report_every < 1) throw std::exception();
  } catch (const std::exception&) {
    throw std::invalid_argument("bad --report-every '" + text + "'");
  }
}

mgt::ParsedStream read_stream(const std::string& input, mgt::StreamFormat format) {
  if (input == "-") return mgt::parse_edge_stream(std::cin, format);
  return mgt::parse_edge_stream_file(input, format);
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) {
      try {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::exception();
      } catch (const std::exception&) {
        throw std::invalid_argument("bad value '" + item + "' in " + flag);
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument(flag + " needs at least one value");
  return out;
}

struct OutputSink {
  explicit OutputSink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw mgt::InputError("cannot open output file: " + path);
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle and transitivity estimation for multigraph edge streams"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed_flag;
  std::string input = "-";
  std::string output;
  std::string format_text = "auto";
  std::string windows_text = "all";
  bool json = false;

  double alpha = 1.0;
  double beta = 1.0;
  bool no_debias = false;
  std::string report_every_text;
  std::optional<std::uint64_t> wedge_budget;
  std::optional<double> wedges_hint;

  auto add_common = [&](CLI::App* cmd, bool with_input = true) {
    if (with_input) cmd->add_option("input", input, "input edge list ('-' for stdin)");
    cmd->add_option("--seed", seed_flag, "sampling seed (default: $MG_TRIANGLE_SEED or 1)");
    cmd->add_option("--output", output, "write report to a file instead of stdout");
    cmd->add_flag("--json", json, "line-delimited JSON instead of CSV");
    cmd->add_option("--format", format_text,
                    "input format: auto | plain | timestamped");
  };

  CLI::App* run = app.add_subcommand("run", "estimate over a stream with periodic reports");
  add_common(run);
  run->add_option("--alpha", alpha, "edge sampling rate in (0,1]");
  run->add_option("--beta", beta, "wedge sampling rate in (0,1]");
  run->add_option("--windows", windows_text,
                  "comma list: all | last-edges:<k> | timespan:<span>");
  run->add_option("--report-every", report_every_text,
                  "report interval: <n> | edges:<n> | ts:<n>");
  run->add_flag("--no-debias", no_debias, "disable the reset step (biased control)");
  run->add_option("--wedge-budget", wedge_budget,
                  "target w-list size; derives beta (needs --wedges-hint)");
  run->add_option("--wedges-hint", wedges_hint,
                  "estimated total wedge count for --wedge-budget");

  std::string alphas_text, betas_text;
  std::uint64_t repeats = 1;
  std::uint64_t oracle_cap = 2'000'000;
  unsigned threads = 1;

  CLI::App* sweep = app.add_subcommand("sweep", "convergence sweep over (alpha, beta)");
  add_common(sweep);
  sweep->add_option("--alphas", alphas_text, "comma list of alpha values")->required();
  sweep->add_option("--betas", betas_text, "comma list of beta values")->required();
  sweep->add_option("--repeats", repeats, "runs per (alpha, beta) setting");
  sweep->add_option("--windows", windows_text,
                    "comma list: all | last-edges:<k> | timespan:<span>");
  sweep->add_flag("--no-debias", no_debias, "disable the reset step (biased control)");
  sweep->add_option("--oracle-cap", oracle_cap,
                    "skip exact columns for streams above this many multiedges");
  sweep->add_option("--threads", threads, "parallel engine runs");

  double replicate_p = 1.0 / 3.0;
  std::string replicate_counts_text;

  CLI::App* generate =
      app.add_subcommand("generate", "synthesize a multigraph stream from a simple edge list");
  add_common(generate);
  generate->add_option("--replicate-p", replicate_p,
                       "probability an edge is replicated (default 1/3)");
  generate->add_option("--replicate-counts", replicate_counts_text,
                       "comma list of replication counts (default 2,4,8,16,32)");

  std::uint64_t at = 0;

  CLI::App* exact = app.add_subcommand("exact", "exact counts by enumeration (desk scale)");
  add_common(exact);
  exact->add_option("--windows", windows_text,
                    "comma list: all | last-edges:<k> | timespan:<span>");
  exact->add_option("--at", at, "query at this stream position (default: end)");
  exact->add_option("--oracle-cap", oracle_cap, "refuse streams above this many multiedges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    mgt::Seed seed = resolve_seed(seed_flag);
    mgt::StreamFormat stream_format = parse_format(format_text);
    OutputSink sink(output);

    if (run->parsed()) {
      mgt::RunConfig config;
      config.params = mgt::Parameters{alpha, beta, seed};
      config.windows = mgt::parse_window_list(windows_text);
      config.no_debias = no_debias;
      config.format = json ? mgt::ReportFormat::JsonLines : mgt::ReportFormat::Csv;
      if (!report_every_text.empty()) parse_report_every(report_every_text, config);
      if (wedge_budget.has_value() != wedges_hint.has_value())
        throw std::invalid_argument("--wedge-budget and --wedges-hint go together");
      mgt::ParsedStream stream = read_stream(input, stream_format);
      if (config.cadence == mgt::ReportCadence::Timestamps && !stream.has_timestamps)
        throw std::invalid_argument("ts report cadence needs a timestamped stream");
      if (wedge_budget)
        config.params.beta = mgt::derive_beta(alpha, *wedge_budget, *wedges_hint);
      mgt::run_stream(stream, config, sink.stream());
    } else if (sweep->parsed()) {
      mgt::SweepConfig config;
      config.base.params.seed = seed;
      config.base.windows = mgt::parse_window_list(windows_text);
      config.base.no_debias = no_debias;
      config.base.format = json ? mgt::ReportFormat::JsonLines : mgt::ReportFormat::Csv;
      config.alphas = parse_double_list(alphas_text, "--alphas");
      config.betas = parse_double_list(betas_text, "--betas");
      config.repeats = repeats < 1 ? 1 : repeats;
      config.oracle_cap = oracle_cap;
      config.threads = threads;
      mgt::ParsedStream stream = read_stream(input, stream_format);
      mgt::run_sweep(stream, config, sink.stream());
    } else if (generate->parsed()) {
      mgt::GenerateConfig config;
      config.seed = seed;
      config.replication.probability = replicate_p;
      if (!replicate_counts_text.empty()) {
        config.replication.counts.clear();
        for (double v : parse_double_list(replicate_counts_text, "--replicate-counts")) {
          if (v < 1 || v != static_cast<std::uint32_t>(v))
            throw std::invalid_argument("--replicate-counts must be positive integers");
          config.replication.counts.push_back(static_cast<std::uint32_t>(v));
        }
      }
      mgt::ParsedStream stream = read_stream(input, stream_format);
      mgt::run_generate(stream, config, sink.stream());
    } else if (exact->parsed()) {
      mgt::ExactConfig config;
      config.windows = mgt::parse_window_list(windows_text);
      config.at = at;
      config.oracle_cap = oracle_cap;
      config.format = json ? mgt::ReportFormat::JsonLines : mgt::ReportFormat::Csv;
      mgt::ParsedStream stream = read_stream(input, stream_format);
      mgt::run_exact(stream, config, sink.stream());
    }
  } catch (const mgt::UnsupportedWindow& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupportedWindow;
  } catch (const mgt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const mgt::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
