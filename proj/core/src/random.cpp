#include "levelga/random.hpp"

#include <stdexcept>

namespace levelga {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

RandomStream RandomStream::substream(std::uint64_t id) const {
    // Two mixing rounds keep child seeds distinct from sibling and parent
    // seeds even for small consecutive ids.
    return RandomStream(splitmix64(splitmix64(seed_) ^ splitmix64(~id)));
}

std::uint64_t RandomStream::next_u64() { return gen_(); }

double RandomStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t RandomStream::uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: n == 0");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t u;
    do {
        u = next_u64();
    } while (u >= limit);
    return static_cast<std::size_t>(u % bound);
}

bool RandomStream::bernoulli(double p) {
    if (p <= 0.0) {
        if (p < 0.0) throw std::invalid_argument("bernoulli: p < 0");
        return false;
    }
    if (p >= 1.0) {
        if (p > 1.0) throw std::invalid_argument("bernoulli: p > 1");
        return true;
    }
    return uniform01() < p;
}

}  // namespace levelga
