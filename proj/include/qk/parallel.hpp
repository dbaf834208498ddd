#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qk {

// Worker count: explicit request > QK_THREADS > hardware concurrency.
inline int resolve_threads(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("QK_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0)
                return v;
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, count).  Work items must write only to their own
// result slots; the schedule (blocked by index) never affects the output.
template <class Fn>
void parallel_for(long long count, int threads, Fn fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count <= 1) {
        for (long long i = 0; i < count; ++i)
            fn(i);
        return;
    }
    if (threads > count)
        threads = static_cast<int>(count);
    std::vector<std::thread> pool;
    long long chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long long lo = t * chunk;
        long long hi = std::min(count, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([lo, hi, &fn] {
            for (long long i = lo; i < hi; ++i)
                fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace qk
