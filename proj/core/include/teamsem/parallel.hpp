#ifndef TEAMSEM_PARALLEL_HPP
#define TEAMSEM_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace teamsem {

inline unsigned effective_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Splits [0, total) into one contiguous chunk per worker and runs `body`
// (worker_index, begin, end) on each.  Workers must only write to
// worker-local slots; callers merge in worker order, which keeps results
// independent of scheduling.
inline void parallel_chunks(
    std::uint64_t total, unsigned threads,
    const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
    unsigned n = effective_threads(threads);
    if (total < 2 * n) n = 1;
    if (n == 1) {
        body(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    std::uint64_t chunk = (total + n - 1) / n;
    for (unsigned w = 0; w < n; ++w) {
        std::uint64_t begin = w * chunk;
        std::uint64_t end = begin + chunk < total ? begin + chunk : total;
        if (begin >= end) break;
        pool.emplace_back(body, w, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace teamsem

#endif  // TEAMSEM_PARALLEL_HPP
