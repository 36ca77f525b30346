#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hcs {

// Seeded RNG wrapper. Bounded draws and shuffles are implemented here instead
// of using std distributions so that identical seeds give identical outputs
// across standard library implementations.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(uint64_t seed) : eng(seed ^ 0x9e3779b97f4a7c15ULL) {}

    uint64_t u64() { return eng(); }

    // uniform in [0, 1) with 53 random bits
    double uniform01() { return (u64() >> 11) * 0x1.0p-53; }

    // uniform in [0, n), rejection sampled
    int below(int n) {
        uint64_t bound = static_cast<uint64_t>(n);
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do { x = u64(); } while (x >= limit);
        return static_cast<int>(x % bound);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(static_cast<int>(i)));
            std::swap(v[i - 1], v[j]);
        }
    }
};

}  // namespace hcs
