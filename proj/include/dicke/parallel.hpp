// parallel.hpp — Deterministic index-parallel loops for parameter sweeps

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace dicke {

// Worker count: DICKE_THREADS when set to a positive integer, else hardware
// concurrency (at least 1).
unsigned sweep_thread_count();

// Calls body(i) for every i in [0, n). Each index is visited exactly once; the
// caller writes results into pre-assigned slots, so output never depends on
// scheduling. The first exception thrown by any body is rethrown after join.
template <class Body>
void parallel_for(std::size_t n, Body&& body, unsigned threads = sweep_thread_count()) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace dicke
