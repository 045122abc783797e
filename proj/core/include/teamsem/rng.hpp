#ifndef TEAMSEM_RNG_HPP
#define TEAMSEM_RNG_HPP

#include <cstdint>

namespace teamsem {

// splitmix64.  Chosen over <random> engines because its output is pinned by
// the algorithm itself, not by the standard library's distribution
// implementations, so sampled verification runs replay bit-identically on
// any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).  n must be positive.
    std::uint64_t below(std::uint64_t n) noexcept {
        // Rejection against the largest multiple of n; unbiased.
        std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % n;
    }

    // Uniform double in [0, 1) with 53 significant bits.
    double unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) noexcept { return unit() < p; }

private:
    std::uint64_t state_;
};

// Derives an independent per-stream seed from a base seed, so that sample i
// of a run can be generated in isolation (and hence in parallel).
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) noexcept {
    Rng r(base ^ (0x632be59bd9b4e019ull * (stream + 1)));
    return r.next_u64();
}

}  // namespace teamsem

#endif  // TEAMSEM_RNG_HPP
