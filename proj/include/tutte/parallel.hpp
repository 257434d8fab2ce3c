#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace tutte::detail {

/// Runs fn(chunk_begin, chunk_end, partial&) over [0, n) split into contiguous
/// chunks, one per worker, and returns the partials in chunk order.  Callers
/// fold the partials in that fixed order, so results are independent of the
/// thread count.
template <class Partial, class Fn>
std::vector<Partial> run_chunked(std::uint64_t n, unsigned threads, Fn fn) {
    if (threads <= 1 || n < 2) {
        std::vector<Partial> out(1);
        fn(std::uint64_t(0), n, out[0]);
        return out;
    }
    const std::uint64_t chunks = std::min<std::uint64_t>(threads, n);
    std::vector<Partial> out(chunks);
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = n * c / chunks;
        const std::uint64_t end = n * (c + 1) / chunks;
        pool.emplace_back([&, c, begin, end] { fn(begin, end, out[c]); });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace tutte::detail
