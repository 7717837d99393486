#include "kummerlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace kummerlab {

unsigned worker_count() {
    unsigned n = 0;
    if (const char* env = std::getenv("KUMMERLAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 0) n = static_cast<unsigned>(v);
    }
    if (n == 0) n = std::thread::hardware_concurrency();
    return std::clamp(n, 1u, 64u);
}

void parallel_chunks(u64 n, const std::function<void(u64, u64)>& fn) {
    if (n == 0) return;
    const unsigned workers = static_cast<unsigned>(std::min<u64>(worker_count(), n));
    if (workers <= 1 || n < 64) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const u64 chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const u64 begin = static_cast<u64>(w) * chunk;
        const u64 end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

} // namespace kummerlab
