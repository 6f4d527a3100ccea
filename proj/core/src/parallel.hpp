#pragma once

// Chunked parallel-for over an index range. Callers keep determinism by
// writing results into per-index slots and reducing serially afterwards.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bitlsh::detail {

inline unsigned effective_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

template <typename Fn>
void parallel_for(uint64_t count, unsigned threads, Fn&& fn) {
    threads = effective_threads(threads);
    if (threads <= 1 || count < 2) {
        for (uint64_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    if (threads > count) {
        threads = static_cast<unsigned>(count);
    }
    std::atomic<uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::mutex error_mu;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const uint64_t i = next.fetch_add(1);
                if (i >= count || failed.load(std::memory_order_relaxed)) {
                    return;
                }
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!failed.exchange(true)) {
                        error = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace bitlsh::detail
