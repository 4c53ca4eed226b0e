#ifndef SELORB_EXACT_PARALLEL_HPP
#define SELORB_EXACT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace selorb {

inline unsigned default_workers()
{
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

/* Evaluate fn(0..chunks-1) on up to `workers` threads. Results come back in
   chunk order regardless of scheduling, so merges are deterministic. */
template <class F> auto run_chunks(size_t chunks, unsigned workers, F fn)
{
    using R = decltype(fn(size_t(0)));
    std::vector<R> out(chunks);
    if (workers <= 1 || chunks <= 1) {
        for (size_t i = 0; i < chunks; ++i)
            out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errs(chunks);
    auto body = [&]() {
        for (;;) {
            size_t i = next++;
            if (i >= chunks)
                return;
            try {
                out[i] = fn(i);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> th;
    for (unsigned w = 0; w < std::min<size_t>(workers, chunks); ++w)
        th.emplace_back(body);
    for (auto &t : th)
        t.join();
    for (auto &e : errs)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace selorb

#endif
