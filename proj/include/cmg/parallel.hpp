#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace cmg {

// Runs fn(0..count-1) on up to `threads` workers. fn(i) must only touch
// slot i of any shared output, so results do not depend on the schedule.
template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    int workers = std::min(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace cmg
