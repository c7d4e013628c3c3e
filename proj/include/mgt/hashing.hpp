#pragma once
// Seeded hash-based sampling primitives.
//
// Sampling decisions are made by hashing an object's canonical byte
// encoding into [0,1) and comparing against a fixed rate. The decision
// for a given object is a constant over the whole stream, no matter how
// often the object repeats -- that is the property everything else here
// is built on.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mgt {

using VertexId = std::uint64_t;

// Canonical unordered vertex pair: u < v always.
struct EdgeKey {
  VertexId u{};
  VertexId v{};
  auto operator<=>(const EdgeKey&) const = default;
};

// A wedge: two edges sharing `center`, with endpoint ids sorted.
struct WedgeKey {
  VertexId center{};
  VertexId lo{};
  VertexId hi{};
  auto operator<=>(const WedgeKey&) const = default;
};

struct Seed {
  std::uint64_t value = 0;
};

// Orders (u,v) as (min,max). Self-loops are rejected: they form no wedges.
inline EdgeKey canonical_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("rejected edge: self-loop");
  return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
}

// Combines two edges into a wedge key. The edges must share exactly one
// vertex; the shared vertex becomes the center. Symmetric in argument order.
WedgeKey wedge_key(const EdgeKey& e1, const EdgeKey& e2);

// The two constituent edges of a wedge.
inline EdgeKey wedge_edge_lo(const WedgeKey& w) { return canonical_edge(w.center, w.lo); }
inline EdgeKey wedge_edge_hi(const WedgeKey& w) { return canonical_edge(w.center, w.hi); }
// The edge that would close the wedge into a triangle.
inline EdgeKey closing_pair(const WedgeKey& w) { return EdgeKey{w.lo, w.hi}; }

// splitmix64 finalizer; full avalanche on 64 bits.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// FNV-1a over a byte string, seeded, with a mix64 finalizer to fix the
// weak low bits of plain FNV.
std::uint64_t hash_bytes(std::string_view bytes, std::uint64_t seed);

// Top 53 bits of a 64-bit hash as a double in [0,1).
inline double to_unit(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Canonical byte encodings hashed by the sampler. Edge and wedge
// namespaces carry distinct tag bytes so the two decision streams never
// collide even when label bytes do. Labels are length-prefixed; the pair
// (and wedge endpoints) are sorted by label bytes, which makes the value
// independent of both argument order and label arrival order.
std::string encode_edge_key(std::string_view label_a, std::string_view label_b);
std::string encode_wedge_key(std::string_view center, std::string_view end_a,
                             std::string_view end_b);

// hash(e) and hash(w): uniform values in [0,1), pure in (labels, seed).
double hash_unit_edge(std::string_view label_a, std::string_view label_b, Seed seed);
double hash_unit_wedge(std::string_view center, std::string_view end_a,
                       std::string_view end_b, Seed seed);

// Deterministic RNG for stream synthesis and permutation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double next_unit() { return to_unit(next()); }

  // Unbiased integer in [0, n) via Lemire's rejection method.
  std::uint64_t bounded(std::uint64_t n);

 private:
  std::uint64_t state_;
};

// Derives an independent sub-seed (per repeat, per lane) from a base seed.
inline Seed derive_seed(Seed base, std::uint64_t index) {
  return Seed{mix64(base.value ^ mix64(index))};
}

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& k) const {
    return static_cast<std::size_t>(mix64(k.u * 0x9e3779b97f4a7c15ULL ^ mix64(k.v)));
  }
};

struct WedgeKeyHash {
  std::size_t operator()(const WedgeKey& k) const {
    std::uint64_t h = mix64(k.center ^ 0x517cc1b727220a95ULL);
    h = mix64(h ^ k.lo);
    return static_cast<std::size_t>(mix64(h ^ k.hi));
  }
};

}  // namespace mgt
