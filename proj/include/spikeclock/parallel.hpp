#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace spikeclock {

// Runs fn(i) for i in [0, n) on up to `threads` workers. Results must go into
// preassigned slots; the split is by index stride, so outputs are identical
// for any thread count. The first exception thrown is rethrown on the caller.
template <class Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn) {
    if (threads < 1) threads = 1;
    if (threads > n) threads = n;
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += threads) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace spikeclock
