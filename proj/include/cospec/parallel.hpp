#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace cospec {

// Deterministic work splitting: item i always lands in the same chunk for a
// given worker count, and callers reduce per-chunk results in index order.
inline void parallel_for_chunks(int64_t n, int workers,
                                const std::function<void(int, int64_t, int64_t)>& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || n <= 1) {
        fn(0, 0, n);
        return;
    }
    workers = static_cast<int>(std::min<int64_t>(workers, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int64_t lo = w * chunk, hi = std::min<int64_t>(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, w, lo, hi] { fn(w, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

// Per-item variant.
inline void parallel_for(int64_t n, int workers, const std::function<void(int64_t)>& fn) {
    parallel_for_chunks(n, workers, [&](int, int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i) fn(i);
    });
}

}  // namespace cospec
