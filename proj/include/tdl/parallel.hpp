#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace tdl {

inline int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(unit, worker) for every unit in [0, units). Workers pull units
/// from a shared counter; results must be merged by the caller in unit
/// order if schedule independence matters.
inline void run_units(std::uint64_t units, int jobs,
                      const std::function<void(std::uint64_t, int)>& fn) {
    if (jobs <= 1 || units <= 1) {
        for (std::uint64_t u = 0; u < units; ++u) fn(u, 0);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto work = [&](int worker) {
        for (;;) {
            std::uint64_t u = next.fetch_add(1);
            if (u >= units) return;
            fn(u, worker);
        }
    };
    std::vector<std::thread> pool;
    int count = jobs;
    if (static_cast<std::uint64_t>(count) > units) count = static_cast<int>(units);
    for (int w = 1; w < count; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();
}

}  // namespace tdl
