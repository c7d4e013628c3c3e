#include "mgt/window.hpp"

#include <algorithm>
#include <charconv>

namespace mgt {

WindowSpec WindowSpec::all_history() { return WindowSpec{}; }

WindowSpec WindowSpec::last_edges(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("last-edges window needs k >= 1");
  return WindowSpec{Kind::LastEdges, k, 0, "last-edges:" + std::to_string(k)};
}

WindowSpec WindowSpec::timespan(std::int64_t span) {
  if (span < 1) throw std::invalid_argument("timespan window needs span >= 1");
  return WindowSpec{Kind::Timespan, 0, span, "timespan:" + std::to_string(span)};
}

namespace {

template <typename T>
T parse_count(const std::string& text, const std::string& what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("bad " + what + ": '" + text + "'");
  return value;
}

}  // namespace

WindowSpec WindowSpec::parse(const std::string& text) {
  if (text == "all") return all_history();
  if (text.rfind("last-edges:", 0) == 0)
    return last_edges(parse_count<std::uint64_t>(text.substr(11), "edge count"));
  if (text.rfind("timespan:", 0) == 0)
    return timespan(parse_count<std::int64_t>(text.substr(9), "timespan"));
  throw std::invalid_argument(
      "bad window '" + text + "' (expected all | last-edges:<k> | timespan:<span>)");
}

std::vector<WindowSpec> parse_window_list(const std::string& text) {
  std::vector<WindowSpec> wins;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
    if (!item.empty()) wins.push_back(WindowSpec::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (wins.empty()) wins.push_back(WindowSpec::all_history());
  return wins;
}

Estimates finalize_estimate(std::uint64_t sampled, std::uint64_t flagged, double alpha,
                            double beta) {
  Estimates est;
  const double scale = alpha * alpha * beta;
  est.sampled_window_wedges = sampled;
  est.wedges_hat = static_cast<double>(sampled) / scale;
  est.triangles_hat = static_cast<double>(flagged) / scale;
  if (est.wedges_hat > 0.0) {
    double tau = 3.0 * est.triangles_hat / est.wedges_hat;
    est.tau_clamped = tau > 1.0;
    est.transitivity_hat = std::min(tau, 1.0);
  }
  est.low_confidence = sampled < kLowConfidenceSamples;
  return est;
}

namespace {

struct WindowBounds {
  // Inclusive lower bounds; a wedge passes when both its edges' latest
  // occurrences are >= these.
  std::uint64_t min_position = 1;
  std::optional<std::int64_t> min_timestamp;
};

WindowBounds window_bounds(const Engine& engine, const WindowSpec& win) {
  WindowBounds b;
  switch (win.kind) {
    case WindowSpec::Kind::AllHistory:
      break;
    case WindowSpec::Kind::LastEdges: {
      std::uint64_t t = engine.current_position();
      b.min_position = t >= win.edge_count ? t - win.edge_count + 1 : 1;
      break;
    }
    case WindowSpec::Kind::Timespan: {
      if (!engine.current_timestamp())
        throw UnsupportedWindow("window '" + win.label +
                                "' needs a timestamped stream");
      // Inclusive on both ends: span 5 ending at time Y covers Y-4..Y.
      b.min_timestamp = *engine.current_timestamp() - win.span + 1;
      break;
    }
  }
  return b;
}

// The latest occurrences of a wedge's two edges, reduced to the values
// window tests compare against: the older of the two.
struct WedgeExtent {
  std::uint64_t min_last_seen;
  std::optional<std::int64_t> min_last_ts;
};

WedgeExtent wedge_extent(const Engine& engine, const WedgeRecord& rec) {
  const EdgeEntry* a = engine.find_edge(rec.e1);
  const EdgeEntry* c = engine.find_edge(rec.e2);
  // Both edges are in the e-list by the wedge invariant.
  WedgeExtent ext{std::min(a->last_seen, c->last_seen), std::nullopt};
  if (a->last_seen_ts && c->last_seen_ts)
    ext.min_last_ts = std::min(*a->last_seen_ts, *c->last_seen_ts);
  return ext;
}

bool extent_passes(const WedgeExtent& ext, const WindowBounds& b) {
  if (ext.min_last_seen < b.min_position) return false;
  if (b.min_timestamp) {
    if (!ext.min_last_ts) return false;
    if (*ext.min_last_ts < *b.min_timestamp) return false;
  }
  return true;
}

}  // namespace

bool wedge_in_window(const WedgeRecord& rec, const Engine& engine, const WindowSpec& win) {
  return extent_passes(wedge_extent(engine, rec), window_bounds(engine, win));
}

Estimates estimate(const Engine& engine, const WindowSpec& win) {
  std::uint64_t sampled = 0;
  std::uint64_t flagged = 0;
  if (win.kind == WindowSpec::Kind::AllHistory) {
    // Every stored wedge passes the all-history window.
    sampled = engine.wlist_size();
    flagged = engine.flagged_total();
  } else {
    WindowBounds bounds = window_bounds(engine, win);
    engine.for_each_wedge([&](const WedgeRecord& rec) {
      if (!extent_passes(wedge_extent(engine, rec), bounds)) return;
      ++sampled;
      flagged += rec.closed ? 1 : 0;
    });
  }
  Estimates est = finalize_estimate(sampled, flagged, engine.params().alpha,
                                    engine.params().beta);
  est.at_position = engine.current_position();
  est.at_timestamp = engine.current_timestamp();
  return est;
}

std::vector<Estimates> estimate_many(const Engine& engine,
                                     std::span<const WindowSpec> wins) {
  std::vector<WindowBounds> bounds;
  bounds.reserve(wins.size());
  for (const WindowSpec& win : wins) bounds.push_back(window_bounds(engine, win));

  std::vector<std::uint64_t> sampled(wins.size(), 0);
  std::vector<std::uint64_t> flagged(wins.size(), 0);
  engine.for_each_wedge([&](const WedgeRecord& rec) {
    WedgeExtent ext = wedge_extent(engine, rec);
    for (std::size_t i = 0; i < wins.size(); ++i) {
      if (!extent_passes(ext, bounds[i])) continue;
      ++sampled[i];
      flagged[i] += rec.closed ? 1 : 0;
    }
  });

  std::vector<Estimates> out;
  out.reserve(wins.size());
  for (std::size_t i = 0; i < wins.size(); ++i) {
    Estimates est = finalize_estimate(sampled[i], flagged[i], engine.params().alpha,
                                      engine.params().beta);
    est.at_position = engine.current_position();
    est.at_timestamp = engine.current_timestamp();
    out.push_back(est);
  }
  return out;
}

}  // namespace mgt
