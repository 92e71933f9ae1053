#include "orlicz_tf/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace otf {

namespace {

std::atomic<int> g_override{0};
thread_local bool t_inside = false;

int env_threads()
{
    const char* s = std::getenv("ORLICZ_TF_THREADS");
    if (!s) return 0;
    int n = std::atoi(s);
    return n > 0 ? n : 0;
}

}  // namespace

int worker_count()
{
    if (int o = g_override.load()) return o;
    if (int e = env_threads()) return e;
    unsigned h = std::thread::hardware_concurrency();
    return h ? int(h) : 1;
}

void set_worker_count(int n) { g_override.store(n > 0 ? n : 0); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    int workers = std::min<std::size_t>(worker_count(), n);
    if (t_inside || workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto run = [&] {
        t_inside = true;
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!err) err = std::current_exception();
            next.store(n);
        }
        t_inside = false;
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace otf
