#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace factorlab::detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(chunk) for every chunk in [0, num_chunks) across the given number
// of worker threads. Callers store per-chunk results and reduce them in
// chunk order afterwards, which keeps outcomes independent of scheduling.
template <typename Fn>
void for_each_chunk(int num_chunks, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || num_chunks <= 1) {
        for (int c = 0; c < num_chunks; ++c) fn(c);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int c = next.fetch_add(1); c < num_chunks; c = next.fetch_add(1)) fn(c);
    };
    std::vector<std::thread> pool;
    int spawn = std::min(threads, num_chunks);
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace factorlab::detail
