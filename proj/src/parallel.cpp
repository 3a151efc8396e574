#include "plab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace plab {

int worker_count() {
    if (const char* env = std::getenv("PERCEPTRON_LAB_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    return hw < 1 ? 1 : hw;
}

void parallel_for(long n, const std::function<void(long)>& fn) {
    if (n <= 0) return;
    const int workers = static_cast<int>(std::min<long>(worker_count(), n));
    if (workers == 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const long i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace plab
