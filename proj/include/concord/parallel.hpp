#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace concord {

/// Worker count: CONCORD_THREADS if set, otherwise hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("CONCORD_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs body(i) for i in [0,n). Each index must write only to its own slots,
/// so the result is identical for any worker count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const unsigned workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    pool.reserve(used);
    for (unsigned w = 0; w < used; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += used) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace concord
