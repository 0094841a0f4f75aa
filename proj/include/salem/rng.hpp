#ifndef SALEM_RNG_HPP
#define SALEM_RNG_HPP

#include <cstdint>
#include <random>

namespace salem {

/// Seeded generator with a platform-stable mapping to doubles.
/// mt19937_64 output is standardized, so identical seeds reproduce
/// identical draws on any compiler.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0, 1), 53 usable bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace salem

#endif
