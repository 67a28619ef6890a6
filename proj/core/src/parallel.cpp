#include "rcsim/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace rcsim {

int resolve_threads(int requested) {
    if (requested >= 1) return requested;
    if (const char* env = std::getenv("RCSIM_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);

    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    struct Failure {
        std::size_t index;
        std::exception_ptr error;
    };
    std::vector<Failure> failures(workers, Failure{0, nullptr});
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;

    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        pool.emplace_back([&, w, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) {
                try {
                    fn(i);
                } catch (...) {
                    failures[w] = {i, std::current_exception()};
                    return;  // abandon the rest of this block
                }
            }
        });
    }
    for (auto& t : pool) t.join();

    const Failure* first = nullptr;
    for (const auto& f : failures)
        if (f.error && (!first || f.index < first->index)) first = &f;
    if (first) std::rethrow_exception(first->error);
}

}  // namespace rcsim
