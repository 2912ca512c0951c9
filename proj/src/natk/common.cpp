#include "natk/common.hpp"

#include <atomic>
#include <thread>

namespace natk {

std::string to_hex16(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::optional<std::size_t> first_hit(std::size_t n, int threads,
                                     const std::function<bool(std::size_t)>& probe) {
    if (threads < 1) threads = 1;
    if (threads == 1 || n < 256) {
        for (std::size_t i = 0; i < n; ++i)
            if (probe(i)) return i;
        return std::nullopt;
    }
    std::atomic<std::size_t> best{n};
    std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::size_t chunk = (n + nt - 1) / nt;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) {
                if (i >= best.load(std::memory_order_relaxed)) break;
                if (probe(i)) {
                    std::size_t cur = best.load(std::memory_order_relaxed);
                    while (i < cur &&
                           !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                    }
                    break;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    std::size_t r = best.load();
    if (r == n) return std::nullopt;
    return r;
}

}  // namespace natk
