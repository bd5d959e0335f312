#pragma once

#include <cstdint>

namespace arrowlab {

/// Deterministic pseudo-random stream (xoshiro256** seeded via splitmix64).
///
/// Every stochastic operation in the library takes one of these explicitly;
/// nothing reads global state. Identical seed => bit-identical stream on any
/// platform, which is what makes trial replay exact. Satisfies
/// std::uniform_random_bit_generator.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) {
        // splitmix64 expansion of the 64-bit seed into the 256-bit state.
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~std::uint64_t{0}; }

    result_type operator()() { return next_u64(); }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 significant bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Multiply-shift; bias is O(n / 2^64).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4];
};

/// Pure hash of (master seed, trial index) -> per-trial seed.
///
/// Trials seeded this way are independent of execution order, so a worker
/// pool of any size reproduces the serial run exactly.
inline std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                       std::uint64_t trial_index) {
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(master_seed + 0x9e3779b97f4a7c15ULL) ^
               mix(trial_index + 0xd1b54a32d192ed03ULL));
}

}  // namespace arrowlab
