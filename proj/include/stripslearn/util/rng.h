#ifndef STRIPSLEARN_UTIL_RNG_H
#define STRIPSLEARN_UTIL_RNG_H

#include <cassert>
#include <cstdint>

namespace util {

// Small deterministic RNG (splitmix64). Self-contained so that seeded runs
// produce identical streams on every platform, which the trace samplers and
// tokenizers rely on. stream() derives an independent stream from a base
// seed and an index; parallel per-trace generation uses one stream per
// trace so parallel and serial runs agree.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix(seed ^ mix(index + 0x51ed270b35f24183ull)));
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform in [0, n), unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        assert(n > 0);
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform in [0, 1) with 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    int binomial(int n, double p) {
        int hits = 0;
        for (int i = 0; i < n; ++i)
            if (chance(p)) ++hits;
        return hits;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace util

#endif
