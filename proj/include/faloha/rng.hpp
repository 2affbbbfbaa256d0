#pragma once

#include <cstdint>
#include <random>

namespace faloha {

// splitmix64 step; used only to derive well-separated substream seeds.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic substream seed for (root, stream_id). Streams with distinct
// ids are statistically independent for simulation purposes.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream_id) {
    std::uint64_t s = root;
    std::uint64_t a = splitmix64_next(s);
    s ^= 0x9e3779b97f4a7c15ull * (stream_id + 1);
    std::uint64_t b = splitmix64_next(s);
    return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

// Seeded random stream. Draw helpers are hand-rolled so that the stream of
// values is fully determined by the seed, independent of the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // unbiased integer in [0, n)
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

    // inclusive range
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // uniform in [0, 1) with 53-bit resolution
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace faloha
