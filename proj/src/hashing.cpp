#include "mgt/hashing.hpp"

namespace mgt {

namespace {

constexpr char kEdgeTag = 'E';
constexpr char kWedgeTag = 'W';

void append_len_prefixed(std::string& out, std::string_view s) {
  std::uint64_t n = s.size();
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((n >> (8 * i)) & 0xff));
  out.append(s);
}

}  // namespace

WedgeKey wedge_key(const EdgeKey& e1, const EdgeKey& e2) {
  if (e1 == e2) throw std::invalid_argument("invalid wedge: identical edges");
  VertexId center, a, b;
  if (e1.u == e2.u) {
    center = e1.u; a = e1.v; b = e2.v;
  } else if (e1.u == e2.v) {
    center = e1.u; a = e1.v; b = e2.u;
  } else if (e1.v == e2.u) {
    center = e1.v; a = e1.u; b = e2.v;
  } else if (e1.v == e2.v) {
    center = e1.v; a = e1.u; b = e2.u;
  } else {
    throw std::invalid_argument("invalid wedge: edges share no vertex");
  }
  // Sharing two vertices would mean e1 == e2, handled above; a != b holds.
  return a < b ? WedgeKey{center, a, b} : WedgeKey{center, b, a};
}

std::uint64_t hash_bytes(std::string_view bytes, std::uint64_t seed) {
  constexpr std::uint64_t kFnvPrime = 1099511628211ULL;
  constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
  std::uint64_t h = kFnvOffset ^ mix64(seed);
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return mix64(h);
}

std::string encode_edge_key(std::string_view label_a, std::string_view label_b) {
  if (label_b < label_a) std::swap(label_a, label_b);
  std::string out;
  out.reserve(1 + 16 + label_a.size() + label_b.size());
  out.push_back(kEdgeTag);
  append_len_prefixed(out, label_a);
  append_len_prefixed(out, label_b);
  return out;
}

std::string encode_wedge_key(std::string_view center, std::string_view end_a,
                             std::string_view end_b) {
  if (end_b < end_a) std::swap(end_a, end_b);
  std::string out;
  out.reserve(1 + 24 + center.size() + end_a.size() + end_b.size());
  out.push_back(kWedgeTag);
  append_len_prefixed(out, center);
  append_len_prefixed(out, end_a);
  append_len_prefixed(out, end_b);
  return out;
}

double hash_unit_edge(std::string_view label_a, std::string_view label_b, Seed seed) {
  return to_unit(hash_bytes(encode_edge_key(label_a, label_b), seed.value));
}

double hash_unit_wedge(std::string_view center, std::string_view end_a,
                       std::string_view end_b, Seed seed) {
  return to_unit(hash_bytes(encode_wedge_key(center, end_a, end_b), seed.value));
}

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("bounded(0)");
  while (true) {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t threshold = -n % n;
      if (lo < threshold) continue;
    }
    return static_cast<std::uint64_t>(m >> 64);
  }
}

}  // namespace mgt
