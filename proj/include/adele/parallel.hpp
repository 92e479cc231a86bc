#ifndef ADELE_PARALLEL_HPP
#define ADELE_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <optional>
#include <thread>
#include <vector>

namespace adele {

// Worker cap: ADELE_LAB_THREADS if set, else the machine parallelism.
inline unsigned worker_count() {
    if (const char* env = std::getenv("ADELE_LAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return (unsigned)v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Splits [0, count) into fixed-size chunks, evaluates them on a worker pool,
// and combines results strictly in chunk order. The chunking (and therefore
// the result, bit for bit) does not depend on the number of workers.
template <class T, class Eval, class Combine>
T parallel_chunk_reduce(std::size_t count, std::size_t chunk_size, T identity, Eval eval, Combine combine) {
    if (count == 0) return identity;
    std::size_t nchunks = (count + chunk_size - 1) / chunk_size;
    unsigned workers = std::min<std::size_t>(worker_count(), nchunks);
    if (workers <= 1) {
        T acc = std::move(identity);
        for (std::size_t i = 0; i < nchunks; ++i) {
            std::size_t lo = i * chunk_size;
            std::size_t hi = std::min(count, lo + chunk_size);
            acc = combine(acc, eval(lo, hi));
        }
        return acc;
    }
    std::vector<std::optional<T>> results(nchunks);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= nchunks) return;
            std::size_t lo = i * chunk_size;
            std::size_t hi = std::min(count, lo + chunk_size);
            results[i].emplace(eval(lo, hi));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    T acc = std::move(identity);
    for (std::size_t i = 0; i < nchunks; ++i) acc = combine(acc, std::move(*results[i]));
    return acc;
}

} // namespace adele

#endif
