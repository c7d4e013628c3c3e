#pragma once
// Windowed estimates from the reservoir state.
//
// A window never touches engine state; it only selects which stored
// wedges count at query time. An edge belongs to the windowed graph iff
// its latest occurrence falls inside the window, and a wedge counts iff
// both of its edges do.
//
// Closure flags need no window check of their own: a set flag was set by
// a closing arrival that came after both member edges' latest
// occurrences, so that arrival lies inside any window containing the
// members, and the closing edge's own latest occurrence does too.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mgt/engine.hpp"

namespace mgt {

struct UnsupportedWindow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WindowSpec {
  enum class Kind { AllHistory, LastEdges, Timespan };

  Kind kind = Kind::AllHistory;
  std::uint64_t edge_count = 0;   // k, for LastEdges
  std::int64_t span = 0;          // window width in timestamp units, for Timespan
  std::string label = "all";

  static WindowSpec all_history();
  static WindowSpec last_edges(std::uint64_t k);
  static WindowSpec timespan(std::int64_t span);

  // Grammar: "all" | "last-edges:<k>" | "timespan:<span>".
  static WindowSpec parse(const std::string& text);
};

// Comma-separated list of window specs; empty input means all-history.
std::vector<WindowSpec> parse_window_list(const std::string& text);

struct Estimates {
  double wedges_hat = 0.0;
  double triangles_hat = 0.0;
  double transitivity_hat = 0.0;  // clamped to [0,1]
  std::uint64_t sampled_window_wedges = 0;
  std::uint64_t at_position = 0;
  std::optional<std::int64_t> at_timestamp;
  bool low_confidence = false;  // too few window samples to trust the scale-up
  bool tau_clamped = false;
};

// Fewer window samples than this flags the estimate as low-confidence.
inline constexpr std::uint64_t kLowConfidenceSamples = 25;

// Scale-up arithmetic shared by every estimate path:
//   W_hat = |sampled| / (alpha^2 beta),  T_hat = flagged / (alpha^2 beta),
//   tau_hat = 3 T_hat / W_hat (0 when W_hat is 0), clamped into [0,1].
Estimates finalize_estimate(std::uint64_t sampled, std::uint64_t flagged, double alpha,
                            double beta);

// True iff both constituent edges' latest occurrences fall inside the
// window ending at the engine's current position/timestamp.
bool wedge_in_window(const WedgeRecord& rec, const Engine& engine, const WindowSpec& win);

Estimates estimate(const Engine& engine, const WindowSpec& win);

// One pass over the w-list answering every window at once.
std::vector<Estimates> estimate_many(const Engine& engine,
                                     std::span<const WindowSpec> wins);

}  // namespace mgt
