#pragma once

#include <cstdint>
#include <random>

namespace levelga {

/// Deterministic random stream with splittable substreams. A stream is fully
/// determined by the seed it was constructed or derived with; substream(id)
/// derives an independent child from (seed, id) without touching this
/// stream's draw state, so per-trial streams are reproducible no matter which
/// order trials run in.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    RandomStream substream(std::uint64_t id) const;

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();
    /// Uniform double in [0, 1), 53 random bits.
    double uniform01();
    /// Uniform index in [0, n), rejection sampled so every index is exactly
    /// equally likely.
    std::size_t uniform_index(std::size_t n);
    bool bernoulli(double p);

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace levelga
