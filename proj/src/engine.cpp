#include "mgt/engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mgt {

Engine::Engine(Parameters params, const VertexTable& labels, Options opts)
    : params_(params), opts_(opts), labels_(&labels) {
  if (!(params_.alpha > 0.0 && params_.alpha <= 1.0))
    throw std::invalid_argument("alpha must be in (0,1]");
  if (!(params_.beta > 0.0 && params_.beta <= 1.0))
    throw std::invalid_argument("beta must be in (0,1]");
}

bool Engine::edge_sampled(const EdgeKey& e) const {
  return hash_unit_edge(labels_->label(e.u), labels_->label(e.v), params_.seed) <=
         params_.alpha;
}

bool Engine::wedge_sampled(const WedgeKey& w) const {
  return hash_unit_wedge(labels_->label(w.center), labels_->label(w.lo),
                         labels_->label(w.hi), params_.seed) <= params_.beta;
}

void Engine::advance(const TimedEdge& e) {
  assert(e.edge.u < e.edge.v);
  assert(e.position == current_t_ + 1);
  current_t_ = e.position;
  current_ts_ = e.timestamp;
  ++counters_.edges_seen;
}

std::vector<WedgeKey> Engine::update(const TimedEdge& e) {
  advance(e);

  if (auto it = elist_.find(e.edge); it != elist_.end()) {
    // Repeat of a stored edge: no structural change, but the latest
    // occurrence is what windowed membership is defined over.
    it->second.last_seen = e.position;
    it->second.last_seen_ts = e.timestamp;
    ++counters_.duplicates_sampled;
    return {};
  }
  if (!edge_sampled(e.edge)) return {};

  elist_.emplace(e.edge, EdgeEntry{e.position, e.position, e.timestamp});

  std::vector<WedgeKey> fresh;
  auto consider_neighbors = [&](VertexId shared) {
    auto adj = adjacency_.find(shared);
    if (adj == adjacency_.end()) return;
    for (const EdgeKey& other : adj->second) {
      WedgeKey w = wedge_key(e.edge, other);
      if (!wedge_sampled(w)) continue;
      auto [it, inserted] = windex_.try_emplace(w, static_cast<WedgeIdx>(wedges_.size()));
      if (!inserted) continue;
      wedges_.push_back(WedgeRecord{w, e.edge, other, e.position, false});
      WedgeIdx idx = it->second;
      by_edge_[e.edge].push_back(idx);
      by_edge_[other].push_back(idx);
      by_closure_[closing_pair(w)].push_back(idx);
      fresh.push_back(w);
    }
  };
  // e.edge is not yet in the adjacency index, so it never pairs with itself.
  consider_neighbors(e.edge.u);
  consider_neighbors(e.edge.v);
  adjacency_[e.edge.u].push_back(e.edge);
  adjacency_[e.edge.v].push_back(e.edge);
  return fresh;
}

void Engine::set_closed(WedgeIdx idx, bool value) {
  WedgeRecord& rec = wedges_[idx];
  if (rec.closed == value) return;
  rec.closed = value;
  flagged_ += value ? 1 : -1;
}

void Engine::process(const TimedEdge& e) {
  update(e);
  if (auto it = by_closure_.find(e.edge); it != by_closure_.end())
    for (WedgeIdx idx : it->second) set_closed(idx, true);
  if (opts_.debias)
    if (auto it = by_edge_.find(e.edge); it != by_edge_.end())
      for (WedgeIdx idx : it->second) set_closed(idx, false);
}

std::vector<WedgeKey> Engine::closing_wedges(const EdgeKey& e) const {
  std::vector<WedgeKey> out;
  if (auto it = by_closure_.find(e); it != by_closure_.end())
    for (WedgeIdx idx : it->second) out.push_back(wedges_[idx].wedge);
  return out;
}

std::vector<WedgeKey> Engine::member_wedges(const EdgeKey& e) const {
  std::vector<WedgeKey> out;
  if (auto it = by_edge_.find(e); it != by_edge_.end())
    for (WedgeIdx idx : it->second) out.push_back(wedges_[idx].wedge);
  return out;
}

const EdgeEntry* Engine::find_edge(const EdgeKey& e) const {
  auto it = elist_.find(e);
  return it == elist_.end() ? nullptr : &it->second;
}

const WedgeRecord* Engine::find_wedge(const WedgeKey& w) const {
  auto it = windex_.find(w);
  return it == windex_.end() ? nullptr : &wedges_[it->second];
}

std::uint64_t Engine::state_digest() const {
  // Commutative combination so map iteration order cannot leak through.
  std::uint64_t digest = mix64(current_t_ ^ 0x646967657374ULL);
  digest += mix64(current_ts_ ? static_cast<std::uint64_t>(*current_ts_) + 1 : 0);
  digest += mix64(counters_.edges_seen) + mix64(counters_.duplicates_sampled);
  for (const auto& [edge, entry] : elist_) {
    std::uint64_t h = mix64(edge.u ^ mix64(edge.v));
    h = mix64(h ^ entry.first_seen);
    h = mix64(h ^ entry.last_seen);
    if (entry.last_seen_ts) h = mix64(h ^ static_cast<std::uint64_t>(*entry.last_seen_ts));
    digest += h;
  }
  for (const WedgeRecord& rec : wedges_) {
    std::uint64_t h = mix64(rec.wedge.center ^ mix64(rec.wedge.lo ^ mix64(rec.wedge.hi)));
    h = mix64(h ^ rec.formed_at);
    h = mix64(h ^ (rec.closed ? 0x58ULL : 0x30ULL));
    digest += h;
  }
  return digest;
}

bool Engine::indexes_consistent() const {
  // Rebuild from scratch and compare as sorted sets.
  std::unordered_map<VertexId, std::vector<EdgeKey>> adjacency;
  for (const auto& [edge, entry] : elist_) {
    adjacency[edge.u].push_back(edge);
    adjacency[edge.v].push_back(edge);
  }
  std::unordered_map<EdgeKey, std::vector<WedgeIdx>, EdgeKeyHash> by_edge;
  std::unordered_map<EdgeKey, std::vector<WedgeIdx>, EdgeKeyHash> by_closure;
  for (WedgeIdx i = 0; i < wedges_.size(); ++i) {
    const WedgeRecord& rec = wedges_[i];
    if (!elist_.count(rec.e1) || !elist_.count(rec.e2)) return false;
    if (windex_.find(rec.wedge) == windex_.end()) return false;
    if (windex_.at(rec.wedge) != i) return false;
    by_edge[rec.e1].push_back(i);
    by_edge[rec.e2].push_back(i);
    by_closure[closing_pair(rec.wedge)].push_back(i);
  }
  auto equal_multimap = [](auto rebuilt, const auto& kept) {
    if (rebuilt.size() != kept.size()) return false;
    for (const auto& [key, vals] : kept) {
      auto it = rebuilt.find(key);
      if (it == rebuilt.end()) return false;
      auto a = vals;
      auto b = it->second;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
    return true;
  };
  return equal_multimap(adjacency, adjacency_) && equal_multimap(by_edge, by_edge_) &&
         equal_multimap(by_closure, by_closure_);
}

double derive_beta(double alpha, std::uint64_t wedge_budget, double total_wedges_hint) {
  if (total_wedges_hint <= 0.0) return 1.0;
  double beta = static_cast<double>(wedge_budget) / (alpha * alpha * total_wedges_hint);
  return std::clamp(beta, 1e-12, 1.0);
}

}  // namespace mgt
