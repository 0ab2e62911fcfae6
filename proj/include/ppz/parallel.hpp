// parallel.hpp
// Fixed-partition block parallelism with deterministic reduction.
//
// Work is cut into blocks whose boundaries depend only on the problem size,
// never on the worker count. Callers store one partial result per block and
// reduce them in block order, so results are bit-identical for any --threads.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ppz {

namespace detail {
inline std::atomic<unsigned>& thread_setting() {
    static std::atomic<unsigned> value{0};
    return value;
}
}  // namespace detail

// 0 means hardware_concurrency().
inline void set_thread_count(unsigned n) { detail::thread_setting().store(n); }

inline unsigned thread_count() {
    const unsigned n = detail::thread_setting().load();
    if (n != 0) return n;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Calls fn(block) for block in [0, n_blocks). Blocks are claimed dynamically
// but each block's work is independent of which worker runs it.
template <class Fn>
void parallel_for_blocks(std::int64_t n_blocks, Fn&& fn, unsigned threads = 0) {
    if (n_blocks <= 0) return;
    if (threads == 0) threads = thread_count();
    threads = static_cast<unsigned>(std::min<std::int64_t>(threads, n_blocks));
    if (threads <= 1) {
        for (std::int64_t b = 0; b < n_blocks; ++b) fn(b);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::int64_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            try {
                fn(b);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n_blocks);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

// Half-open range of block b when [begin, end) is cut into pieces of
// block_size.
struct BlockRange {
    std::int64_t begin;
    std::int64_t end;
};

inline std::int64_t block_count(std::int64_t begin, std::int64_t end, std::int64_t block_size) {
    return end <= begin ? 0 : (end - begin + block_size - 1) / block_size;
}

inline BlockRange block_range(std::int64_t begin, std::int64_t end, std::int64_t block_size,
                              std::int64_t b) {
    const std::int64_t lo = begin + b * block_size;
    return {lo, std::min(end, lo + block_size)};
}

}  // namespace ppz
