#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace oleq {

inline unsigned& worker_count_ref() {
    static unsigned n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

inline void set_worker_count(unsigned n) { worker_count_ref() = std::max(1u, n); }

// Chunked parallel loop. Work must write only to slots owned by its index
// range; reductions are done by the caller afterwards, sequentially, so
// results are independent of the worker count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(worker_count_ref(), n);
    if (workers <= 1) {
        if (n > 0) fn(std::size_t(0), n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr err;
    std::mutex err_mtx;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = std::min(n, std::size_t(w) * chunk);
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mtx);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace oleq
