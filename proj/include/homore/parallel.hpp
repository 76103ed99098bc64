#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace homore {

// Worker cap: hardware concurrency, further capped by HOMORE_THREADS.
inline std::size_t worker_count(std::size_t items) {
    if (items <= 1) return 1;
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("HOMORE_THREADS")) {
        char* end = nullptr;
        unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap >= 1) n = std::min<std::size_t>(n, cap);
    }
    return std::min(n, items);
}

// Scans indices [0, n) with a pure pass/fail predicate and returns the
// smallest failing index, fanning out across workers. The winner is the
// minimal index regardless of scheduling, so verdicts and reported
// counterexamples are deterministic.
template <class Pred>
std::optional<std::size_t> first_fail_index(std::size_t n, Pred&& pass) {
    std::size_t workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            if (!pass(i)) return i;
        return std::nullopt;
    }
    std::atomic<std::size_t> best{n};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                // strided ascending walk: once i passes the best known failure
                // nothing later in this stride can beat it
                for (std::size_t i = w; i < n; i += workers) {
                    if (i >= best.load(std::memory_order_relaxed)) break;
                    if (!pass(i)) {
                        std::size_t cur = best.load(std::memory_order_relaxed);
                        while (i < cur &&
                               !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                        }
                        break;
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    std::size_t idx = best.load();
    if (idx < n) return idx;
    return std::nullopt;
}

}  // namespace homore
