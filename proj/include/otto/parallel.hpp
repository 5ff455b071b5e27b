#pragma once

// Minimal deterministic work partitioning: contiguous index chunks, one per
// thread, merged in chunk order by the callers.  Every computation in this
// library that uses it produces bit-identical results for any thread count.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace otto {

// Thread count resolution: an explicit request wins, otherwise the
// OTTO_THREADS environment variable, otherwise 1.
inline unsigned resolve_thread_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("OTTO_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1 && n <= 4096) return static_cast<unsigned>(n);
    }
    return 1;
}

// Invoke fn(begin, end, chunk_index) over a partition of [0, n) into at most
// `thread_count` contiguous chunks (thread_count resolved as above).  Returns
// the number of chunks dispatched.  With one chunk, runs inline.
template <class Fn>
unsigned parallel_for(std::size_t n, unsigned thread_count, const Fn& fn) {
    const std::size_t resolved = std::min<std::size_t>(resolve_thread_count(thread_count),
                                                       std::max<std::size_t>(n, 1));
    const unsigned threads = static_cast<unsigned>(resolved);
    if (threads <= 1) {
        fn(static_cast<std::size_t>(0), n, 0u);
        return 1;
    }
    const std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    unsigned used = 0;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = static_cast<std::size_t>(t) * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end, t] { fn(begin, end, t); });
        ++used;
    }
    for (auto& th : pool) th.join();
    return used;
}

}  // namespace otto
