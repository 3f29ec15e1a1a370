#include "opam/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace opam {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn, int jobs) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const int workers = std::min<std::size_t>(jobs, count);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

}  // namespace opam
