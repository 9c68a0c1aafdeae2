#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace pubsim {

/// Logical sample streams. Every consumer of randomness owns a named stream,
/// so two runs with the same seed draw identical agent populations even when
/// the scenarios diverge afterwards.
enum class RngStream : std::uint64_t {
    agent_creation = 0,
    paper_quality = 1,
    review_noise = 2,
    journal_perception = 3,
    scheduler = 4,
    reviewer_selection = 5,
};

/// Seeded generator for one stream. Identical (seed, stream) pairs produce
/// bitwise-identical sequences on every platform; distinct streams are mixed
/// apart before seeding the engine. Not safe for concurrent sampling from
/// multiple threads; each replication owns its own set of streams.
class Rng {
public:
    Rng(std::uint64_t seed, RngStream stream)
        : Rng(seed, static_cast<std::uint64_t>(stream)) {}

    Rng(std::uint64_t seed, std::uint64_t stream_id)
        : engine_(mix(mix(seed) ^ mix(0x9e3779b97f4a7c15ull * (stream_id + 1)))) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double on the open interval (0, 1), 53-bit resolution.
    double uniform01_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Rejection sampling, so no modulo bias.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        std::uint64_t x = next_u64();
        while (x < threshold) x = next_u64();
        return x % n;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    // splitmix64 finalizer; spreads seed/stream material over the whole state.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace pubsim
