#pragma once

// Internal helper: deterministic fork/join over contiguous index ranges.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace shufsq::detail {

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SHUFSQ_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(chunk_index, lo, hi) over a partition of [begin, end) into
/// `workers` contiguous chunks. fn must only touch chunk-local state.
inline void parallel_chunks(
    std::uint64_t begin, std::uint64_t end, int workers,
    const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
    std::uint64_t total = end - begin;
    if (total == 0) return;
    int chunks = workers;
    if (static_cast<std::uint64_t>(chunks) > total)
        chunks = static_cast<int>(total);
    if (chunks <= 1) {
        fn(0, begin, end);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    std::uint64_t base = total / chunks, extra = total % chunks;
    std::uint64_t lo = begin;
    for (int c = 0; c < chunks; ++c) {
        std::uint64_t hi = lo + base + (static_cast<std::uint64_t>(c) < extra ? 1 : 0);
        threads.emplace_back([c, lo, hi, &fn] { fn(c, lo, hi); });
        lo = hi;
    }
    for (auto& t : threads) t.join();
}

} // namespace shufsq::detail
