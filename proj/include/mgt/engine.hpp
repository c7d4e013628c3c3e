#pragma once
// The single-pass estimator core: hash-sampled edge and wedge reservoirs
// plus per-wedge closure flags.
//
// Per stream element e_t the engine
//   1. inserts e_t into the e-list if hash(e_t) <= alpha and it is new,
//      forming candidate wedges with stored adjacent edges, each kept if
//      hash(w) <= beta (update step);
//   2. sets the closure flag of every stored wedge whose endpoint pair
//      equals e_t;
//   3. clears the flag of every stored wedge that contains e_t as one of
//      its two edges (the debiasing reset; disabled in no-debias mode).
// Steps 2 and 3 touch disjoint wedge sets: a wedge's closing pair is
// never one of its own edges.
//
// Entries never leave either list. A repeat arrival of a stored edge only
// refreshes its last-seen position/timestamp, which is what windowed
// queries are defined over.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mgt/hashing.hpp"
#include "mgt/stream.hpp"

namespace mgt {

struct Parameters {
  double alpha = 1.0;  // per-edge sampling rate, (0,1]
  double beta = 1.0;   // per-wedge sampling rate, (0,1]
  Seed seed{0};
};

struct EdgeEntry {
  std::uint64_t first_seen = 0;
  std::uint64_t last_seen = 0;
  std::optional<std::int64_t> last_seen_ts;
};

struct WedgeRecord {
  WedgeKey wedge;
  EdgeKey e1, e2;            // constituent edges, both in the e-list
  std::uint64_t formed_at = 0;
  bool closed = false;       // the flag X_w
};

struct Counters {
  std::uint64_t edges_seen = 0;          // stream elements processed
  std::uint64_t duplicates_sampled = 0;  // repeat arrivals of stored edges
  std::uint64_t self_loops_skipped = 0;  // rejected upstream, reported here
};

class Engine {
 public:
  struct Options {
    // When false, the reset step is skipped (the biased control used to
    // show why plain wedge sampling fails on multigraph streams).
    bool debias = true;
  };

  Engine(Parameters params, const VertexTable& labels, Options opts = {});

  // Full per-element step: update, then closure flags, then reset.
  void process(const TimedEdge& e);

  // The reservoir update step alone; returns the newly stored wedges.
  std::vector<WedgeKey> update(const TimedEdge& e);

  // Stored wedges whose endpoint pair equals e (closure candidates).
  std::vector<WedgeKey> closing_wedges(const EdgeKey& e) const;
  // Stored wedges having e as one of their two constituent edges.
  std::vector<WedgeKey> member_wedges(const EdgeKey& e) const;

  const Parameters& params() const { return params_; }
  const Options& options() const { return opts_; }
  const VertexTable& labels() const { return *labels_; }

  std::uint64_t current_position() const { return current_t_; }
  std::optional<std::int64_t> current_timestamp() const { return current_ts_; }

  std::size_t elist_size() const { return elist_.size(); }
  std::size_t wlist_size() const { return wedges_.size(); }
  // The space metric: |e-list| + 2 |w-list|, counted in edges.
  std::uint64_t storage_edges() const { return elist_.size() + 2 * wedges_.size(); }
  std::uint64_t flagged_total() const { return flagged_; }

  Counters& counters() { return counters_; }
  const Counters& counters() const { return counters_; }

  const EdgeEntry* find_edge(const EdgeKey& e) const;
  const WedgeRecord* find_wedge(const WedgeKey& w) const;

  template <typename F>
  void for_each_wedge(F&& f) const {
    for (const WedgeRecord& rec : wedges_) f(rec);
  }

  // Order-independent digest of the full state; used to check query
  // purity and run-to-run determinism.
  std::uint64_t state_digest() const;

  // Rebuilds every inverted index from the primary lists and compares.
  // Returns false on any divergence. Intended for small instances.
  bool indexes_consistent() const;

  // Sampling decisions, exposed for verification.
  bool edge_sampled(const EdgeKey& e) const;
  bool wedge_sampled(const WedgeKey& w) const;

 private:
  using WedgeIdx = std::uint32_t;

  void advance(const TimedEdge& e);
  void set_closed(WedgeIdx idx, bool value);

  Parameters params_;
  Options opts_;
  const VertexTable* labels_;

  std::unordered_map<EdgeKey, EdgeEntry, EdgeKeyHash> elist_;
  std::unordered_map<VertexId, std::vector<EdgeKey>> adjacency_;
  std::vector<WedgeRecord> wedges_;  // insertion order
  std::unordered_map<WedgeKey, WedgeIdx, WedgeKeyHash> windex_;
  std::unordered_map<EdgeKey, std::vector<WedgeIdx>, EdgeKeyHash> by_edge_;
  std::unordered_map<EdgeKey, std::vector<WedgeIdx>, EdgeKeyHash> by_closure_;

  std::uint64_t current_t_ = 0;
  std::optional<std::int64_t> current_ts_;
  std::uint64_t flagged_ = 0;  // running sum of X_w
  Counters counters_;
};

// Picks beta so the expected w-list size stays near `wedge_budget`, given
// an estimate of the total wedge count the stream will expose.
double derive_beta(double alpha, std::uint64_t wedge_budget, double total_wedges_hint);

}  // namespace mgt
