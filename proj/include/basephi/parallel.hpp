#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace basephi {

/// Splits the inclusive range [lo, hi] into at most `jobs` contiguous chunks
/// and runs worker(chunk_lo, chunk_hi) -> R for each, on parallel threads
/// when jobs > 1.  Results come back ordered by chunk, so merging them in
/// sequence is byte-for-byte identical to a single-threaded run.
template <typename R, typename Worker>
std::vector<R> run_chunked(std::uint64_t lo, std::uint64_t hi, int jobs, Worker worker) {
    std::vector<R> results;
    if (hi < lo) return results;
    const std::uint64_t total = hi - lo + 1;
    const std::uint64_t chunks = std::min<std::uint64_t>(std::max(jobs, 1), total);
    results.resize(chunks);
    if (chunks == 1) {
        results[0] = worker(lo, hi);
        return results;
    }
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    const std::uint64_t base = total / chunks, extra = total % chunks;
    std::uint64_t start = lo;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t size = base + (c < extra ? 1 : 0);
        const std::uint64_t chunk_lo = start, chunk_hi = start + size - 1;
        start += size;
        threads.emplace_back(
            [&results, c, chunk_lo, chunk_hi, &worker] { results[c] = worker(chunk_lo, chunk_hi); });
    }
    for (auto& t : threads) t.join();
    return results;
}

}  // namespace basephi
