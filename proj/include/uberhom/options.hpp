#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "uberhom/errors.hpp"

namespace uberhom {

/// Knobs shared by the exponential-size computations.
struct ComputeOptions {
    /// Overrides the per-operation default vertex guard when set.
    std::optional<std::size_t> max_vertices;
    /// Upper bound on worker threads; 1 runs everything inline.
    unsigned jobs = 1;

    std::size_t guard(std::size_t default_limit) const { return max_vertices.value_or(default_limit); }

    void check(std::size_t vertices, std::size_t default_limit) const {
        if (vertices > guard(default_limit)) throw SizeGuardExceeded(vertices, guard(default_limit));
    }
};

inline constexpr std::size_t kDefaultPosetGuard = 16;
inline constexpr std::size_t kDefaultDominationGuard = 24;

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception
/// thrown by any worker is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace uberhom
