#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace durghotona::parallel {

/// Runs fn(i) for i in [0, count) on at most `bound` worker threads.
/// fn must not throw; callers capture per-index outcomes themselves.
inline void for_each_index(size_t count, int bound, const std::function<void(size_t)>& fn) {
    if (count == 0) return;
    const size_t workers =
        bound <= 1 ? 1 : std::min<size_t>(static_cast<size_t>(bound), count);
    if (workers == 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace durghotona::parallel
