#ifndef CZSPLIT_PARALLEL_HPP
#define CZSPLIT_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace czsplit {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [0, n) into one contiguous chunk per worker and runs
/// fn(chunk_index, begin, end) on each. Chunk boundaries depend only on
/// (n, threads), so per-chunk results can be reduced in chunk order for a
/// deterministic total irrespective of scheduling.
template <typename Fn>
void parallel_chunks(std::uint64_t n, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (n == 0) return;
    if (threads <= 1 || n < 2 * threads) {
        fn(0u, std::uint64_t{0}, n);
        return;
    }
    const std::uint64_t per = n / threads;
    const std::uint64_t extra = n % threads;
    std::vector<std::thread> workers;
    workers.reserve(threads);
    std::uint64_t begin = 0;
    for (unsigned c = 0; c < threads; ++c) {
        std::uint64_t len = per + (c < extra ? 1 : 0);
        std::uint64_t end = begin + len;
        workers.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
        begin = end;
    }
    for (auto& w : workers) w.join();
}

} // namespace czsplit

#endif
