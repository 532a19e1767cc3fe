#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace preacq {

/// Effective worker count: explicit request, PREACQ_WORKERS override, or the
/// hardware concurrency when the request is 0.
inline int resolve_workers(int requested) {
    if (const char* env = std::getenv("PREACQ_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Run fn(i) for i in [0, n) on up to `workers` threads. Each index is
/// processed exactly once; fn must only write to its own output slot.
/// Exceptions thrown by fn are rethrown on the calling thread (first one, by
/// lowest index).
template <typename Fn>
void parallel_for(long n, int workers, Fn&& fn) {
    if (n <= 0) return;
    workers = std::min<long>(workers, n) > 0 ? static_cast<int>(std::min<long>(workers, n)) : 1;
    if (workers <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<long> next(0);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(i)] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace preacq
