#include "pnr/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace pnr {

int worker_count() {
    if (const char* env = std::getenv("PNR_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {
thread_local bool inside_parallel_region = false;
}

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
    const int total = end - begin;
    if (total <= 0) return;
    const int workers = std::min(worker_count(), total);
    // Nested regions run serially; the outermost call owns the workers.
    if (workers <= 1 || inside_parallel_region) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const int chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = begin + w * chunk;
        const int hi = std::min(end, lo + chunk);
        pool.emplace_back([&, w, lo, hi] {
            inside_parallel_region = true;
            try {
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace pnr
