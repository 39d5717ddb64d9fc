#pragma once

#include <cmath>
#include <cstdint>

#include "sgst/core/error.hpp"

namespace sgst {

/// Counter-based random stream (Philox4x32-10).
///
/// The n-th draw is a pure function of (seed, stream_id, n), so any draw can
/// be replayed from its counter and ensembles can be partitioned across
/// workers in any order without changing results. Distinct stream_ids give
/// statistically independent sequences.
class RngStream {
public:
    RngStream() : seed_(0), stream_id_(0), counter_(0) {}
    RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t counter = 0)
        : seed_(seed), stream_id_(stream_id), counter_(counter) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }
    std::uint64_t counter() const { return counter_; }

    /// Derived stream with an independent id; pure function of (stream_id, child).
    RngStream substream(std::uint64_t child) const {
        return RngStream(seed_, mix64(stream_id_ ^ mix64(child + 0x117a8fdcbe5c3a21ULL)));
    }

    /// Next raw 64-bit word; advances the counter by exactly one.
    std::uint64_t next_u64() { return word_at(counter_++); }

    /// The n-th word without touching the stream state.
    std::uint64_t word_at(std::uint64_t n) const { return philox(seed_, stream_id_, n); }

    /// Uniform double in [0, 1), 53-bit resolution. One counter tick.
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [a, b). One counter tick.
    double uniform(double a, double b) { return a + uniform01() * (b - a); }

    /// Standard normal via Box-Muller. Two counter ticks.
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Uniform integer in [0, n). One counter tick. n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        // 64-bit draws against n << 2^64: modulo bias is negligible for the
        // lattice sizes used here, and keeping one tick per draw preserves
        // the counter layout.
        return next_u64() % n;
    }

private:
    static std::uint64_t mix64(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t philox(std::uint64_t seed, std::uint64_t stream, std::uint64_t n) {
        std::uint32_t c0 = std::uint32_t(n);
        std::uint32_t c1 = std::uint32_t(n >> 32);
        std::uint32_t c2 = std::uint32_t(stream);
        std::uint32_t c3 = std::uint32_t(stream >> 32);
        std::uint32_t k0 = std::uint32_t(seed);
        std::uint32_t k1 = std::uint32_t(seed >> 32);
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ULL * c0;
            const std::uint64_t p1 = 0xCD9E8D57ULL * c2;
            const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
            const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n1 = lo1;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            const std::uint32_t n3 = lo0;
            c0 = n0; c1 = n1; c2 = n2; c3 = n3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        return (std::uint64_t(c0) << 32) | c1;
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t counter_;
};

enum class CoinFace { Heads, Tails };

/// Biased coin: heads with the given probability. Advances the counter by one.
inline CoinFace coin(RngStream& stream, double probability_heads) {
    if (!(probability_heads >= 0.0 && probability_heads <= 1.0))
        throw ParameterError("coin: probability must lie in [0,1]");
    return stream.uniform01() < probability_heads ? CoinFace::Heads : CoinFace::Tails;
}

}  // namespace sgst
