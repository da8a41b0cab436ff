#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bcs {

// Seeded 64-bit generator used by all randomized pieces (instance generators,
// tests). mt19937_64 output is fixed by the standard, so the same seed gives
// the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n). n must be positive.
    int below(int n) {
        // Rejection sampling on the top bits keeps the draw unbiased without
        // relying on std::uniform_int_distribution (whose mapping varies
        // between standard library implementations).
        const std::uint64_t un = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return static_cast<int>(x % un);
    }

    int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive

    double unit() { return (eng_() >> 11) * (1.0 / 9007199254740992.0); }

    bool chance(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            std::swap(v[i], v[below(i + 1)]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace bcs
