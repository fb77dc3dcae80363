#pragma once

#include <cstdint>

namespace cospec {

// Counter-based splittable randomness. Every random quantity in the project
// is derived from (seed, purpose tag, indices...) through mix64, so runs are
// reproducible and parallel workers never share state.

inline uint64_t mix64(uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t mix64(uint64_t a, uint64_t b) { return mix64(mix64(a) ^ (b * 0xd6e8feb86659fd93ull)); }
inline uint64_t mix64(uint64_t a, uint64_t b, uint64_t c) { return mix64(mix64(a, b), c); }
inline uint64_t mix64(uint64_t a, uint64_t b, uint64_t c, uint64_t d) { return mix64(mix64(a, b, c), d); }

// Purpose tags keep independent consumers of the same seed decorrelated.
namespace rng_tag {
constexpr uint64_t edge_coupling = 0x45444745ull;   // percolation edge labels
constexpr uint64_t union_layer = 0x554e494full;     // second layer of the union coupling
constexpr uint64_t trajectory = 0x5452414aull;      // sampled walks
constexpr uint64_t cluster_levels = 0x434c5653ull;  // branching cluster sampler
constexpr uint64_t relation = 0x52454c4eull;        // random finite relations
constexpr uint64_t graph = 0x47524150ull;           // random graphs
constexpr uint64_t scan = 0x5343414eull;            // percolation scans
}  // namespace rng_tag

// 53-bit mantissa uniform in [0,1).
inline double u01(uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

// Stateless counter stream: value i of the stream keyed by `key`.
class CounterRng {
  public:
    explicit CounterRng(uint64_t key) : key_(key) {}
    uint64_t bits(uint64_t counter) const { return mix64(key_, counter); }
    double uniform(uint64_t counter) const { return u01(bits(counter)); }

  private:
    uint64_t key_;
};

// Minimal sequential engine facade over the counter stream, usable with
// <random> distributions when an exact variate algorithm is wanted.
class CounterEngine {
  public:
    using result_type = uint64_t;
    explicit CounterEngine(uint64_t key) : rng_(key) {}
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ull; }
    result_type operator()() { return rng_.bits(n_++); }

  private:
    CounterRng rng_;
    uint64_t n_ = 0;
};

}  // namespace cospec
