#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "galedim/bits.hpp"
#include "galedim/gale.hpp"
#include "galedim/rational.hpp"

namespace galedim {

// Finite prefix set A of nonempty strings; A-infinity is the set of infinite
// concatenations of members.
struct SelfSimilarSystem {
    std::vector<Bits> strings;
};

// Throws StructureError/DomainError when A is empty, contains the empty
// string, has duplicates, or is not a prefix set.
void validate_system(const SelfSimilarSystem& sys);

double kraft_value(const SelfSimilarSystem& sys, double s);

// Root of sum_{u in A} 2^(-s|u|) = 1, bisected to 1e-9; 0 when |A| = 1.
double selfsimilar_dimension(const SelfSimilarSystem& sys);

// Supergale at exponent s + eps with
//     d(w) = 2^(eps|w|) sum_{u in A, r(w) prefix of u} 2^(-s(|u| - |r(w)|)),
// r(w) the residual of w after greedily peeling complete members. Requires
// the Kraft sum at s to be at most 1; at composite nodes the capital is
// 2^(eps|w|) times that Kraft sum.
SGale selfsimilar_supergale(const SelfSimilarSystem& sys, double s, double eps);

// Number of length-n prefixes of A-infinity members (dynamic program over
// residuals).
BigInt box_count(const SelfSimilarSystem& sys, std::size_t n);

// max over n in [window_lo, window_hi] of log2(counts(n))/n, skipping zero
// counts.
double entropy_rate(const std::function<BigInt(std::size_t)>& counts, std::size_t window_lo,
                    std::size_t window_hi);

double log2_bigint(const BigInt& x);

// Deterministic generator: concatenates members of A in sorted rotation,
// truncated to n bits.
Bits selfsimilar_cycle_prefix(const SelfSimilarSystem& sys, std::size_t n);

// Seeded generator: members chosen uniformly at random.
Bits selfsimilar_sample_prefix(const SelfSimilarSystem& sys, std::size_t n, uint64_t seed);

}  // namespace galedim
