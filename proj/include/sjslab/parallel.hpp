/*
 * parallel.hpp — deterministic index-space parallel map.
 *
 * Bodies write results into caller-owned slots keyed by index, so the output
 * is identical for any thread count. Thread count comes from SJSLAB_THREADS
 * (the only environment variable the library reads), default 1.
 */

#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace sjslab {

inline unsigned thread_count() {
    if (const char* env = std::getenv("SJSLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

template <class Body>
void parallel_for(std::size_t n, Body&& body, unsigned threads = thread_count()) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace sjslab
