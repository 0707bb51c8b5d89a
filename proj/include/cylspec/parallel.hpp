#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace cylspec {

// Static block partition over independent output slots. No reductions happen
// inside the parallel region, so results do not depend on the thread count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nt = static_cast<std::size_t>(threads);
    if (nt > n) nt = n;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        std::size_t lo = n * t / nt;
        std::size_t hi = n * (t + 1) / nt;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace cylspec
