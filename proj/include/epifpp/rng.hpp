#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace epifpp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Mixes (master seed, stream index) into an independent stream seed.
// SplitMix64 finalizer over master + golden-ratio stride; bijective in the
// index for a fixed master, so distinct indices never collide.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seeded random stream. All samplers are implemented on top of the raw
// mt19937_64 output so that results are identical across platforms and
// standard-library versions (std::*_distribution is implementation-defined).
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform on [0,1)
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

    double weibull(double shape, double scale) {
        return scale * std::pow(-std::log1p(-uniform01()), 1.0 / shape);
    }

    // standard Gumbel, cdf exp(-e^{-x})
    double gumbel() { return -std::log(exponential(1.0)); }

    // Box-Muller without caching; two raw draws per variate
    double normal() {
        double r = std::sqrt(2.0 * exponential(1.0));
        double theta = 6.283185307179586476925 * uniform01();
        return r * std::cos(theta);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // unbiased integer in [0, n), rejection sampling
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = gen_();
            if (r >= threshold)
                return r % n;
        }
    }

    template <typename T>
    void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace epifpp
