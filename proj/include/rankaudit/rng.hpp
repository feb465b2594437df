#ifndef RANKAUDIT_RNG_HPP
#define RANKAUDIT_RNG_HPP

#include <cstdint>

namespace rankaudit {

/**
 * SplitMix64 — seedable, splittable PRNG used by every randomized audit step.
 *
 * The audits demand byte-identical results for a given seed regardless of
 * thread scheduling, so each independent unit of work derives its own
 * substream via substream()/mix() instead of sharing one sequential stream.
 * Standard-library distributions are avoided on purpose: their output is not
 * pinned by the standard, this generator is.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double on the closed interval [0, 1].
    double uniform01() {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740991.0);
    }

    /// Uniform double on the closed interval [0, bound], bound >= 0.
    double uniform(double bound) { return uniform01() * bound; }

    /// Uniform integer in [0, n), n >= 1. Multiply-shift reduction.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Combines a stream seed with a word; two finalizer passes keep
    /// neighboring (a, b) pairs statistically unrelated.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9E3779B97F4A7C15ull * (b + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDull;
        return z ^ (z >> 33);
    }

    /// Independent substream for work unit (a, b) of a seeded experiment.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
        return SplitMix64(mix(mix(seed, a), b));
    }

private:
    std::uint64_t state_;
};

} // namespace rankaudit

#endif // RANKAUDIT_RNG_HPP
