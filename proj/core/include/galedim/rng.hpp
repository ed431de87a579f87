#pragma once

// Deterministic randomness contract.
//
// All randomized code draws from std::mt19937_64, whose output sequence is
// fixed by the C++ standard, so identical seeds give identical bytes on every
// platform.  A Bernoulli(beta) bit is produced by drawing the top 53 bits of
// one generator word as a uniform in [0,1) and comparing it against beta:
//     u = (gen() >> 11) * 2^-53,   bit = (u < beta).
// Trial t of a multi-trial experiment seeded with S uses derive_seed(S, t),
// so per-trial streams are independent of scheduling order.

#include <cstdint>
#include <random>

#include "galedim/bits.hpp"

namespace galedim {

// SplitMix64 step; also the per-trial seed derivation.
uint64_t splitmix64(uint64_t x);

// Seed for stream `stream` of an experiment seeded with `seed`.
uint64_t derive_seed(uint64_t seed, uint64_t stream);

class BitSampler {
public:
    explicit BitSampler(uint64_t seed) : gen_(seed) {}

    // Uniform in [0,1) with 53-bit resolution.
    double next_uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // One Bernoulli draw: 1 with probability beta.
    uint8_t next_bit(double beta) { return next_uniform() < beta ? 1 : 0; }

    // Uniform index in [0, n) by rejection, bias-free.
    uint64_t next_index(uint64_t n);

    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace galedim
