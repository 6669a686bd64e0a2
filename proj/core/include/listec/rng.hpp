#pragma once

#include <cstdint>
#include <vector>

namespace listec {

// splitmix64; deterministic across platforms, unlike <random> distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    // uniform in [lo, hi]
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

    bool chance(int num, int den) { return below(den) < num; }

    // k distinct values from {1..universe}, sorted
    std::vector<int> sample(int k, int universe) {
        std::vector<int> pool;
        pool.reserve(universe);
        for (int c = 1; c <= universe; ++c) pool.push_back(c);
        for (int i = 0; i < k; ++i) {
            int j = i + below(static_cast<int>(pool.size()) - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::uint64_t state_;
};

}  // namespace listec
