#include "zetamoments/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zm {

int default_workers() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for_workers(std::int64_t n_blocks, int workers,
                          const std::function<void(std::int64_t, int)>& fn) {
    if (n_blocks <= 0) return;
    if (workers < 1) workers = 1;
    int nthreads = static_cast<int>(std::min<std::int64_t>(workers, n_blocks));
    if (nthreads == 1) {
        for (std::int64_t b = 0; b < n_blocks; ++b) fn(b, 0);
        return;
    }
    std::atomic<std::int64_t> counter{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto body = [&](int worker_id) {
        try {
            for (;;) {
                std::int64_t b = counter.fetch_add(1);
                if (b >= n_blocks) break;
                fn(b, worker_id);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads) - 1);
    for (int w = 1; w < nthreads; ++w) pool.emplace_back(body, w);
    body(0);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

void parallel_for(std::int64_t n_blocks, int workers,
                  const std::function<void(std::int64_t)>& fn) {
    parallel_for_workers(n_blocks, workers, [&](std::int64_t b, int) { fn(b); });
}

}  // namespace zm
