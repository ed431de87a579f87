#pragma once

#include <cstdint>
#include <vector>

#include "galedim/bits.hpp"
#include "galedim/rational.hpp"

namespace galedim {

// Block construction S = r_1 0^(k_1) r_2 0^(k_2) ... with |r_n| = 2n-1
// random bits and k_n = ceil(|r_n| * gamma_n) padding zeros, where gamma_n
// alternates between (1-alpha)/alpha and (1-beta)/beta under a parity
// driver. The logstar schedule drives parity by log*(n); the fast schedule
// (not from the underlying construction, for desk-scale experiments only)
// drives it by floor(log2 log2 n).
enum class ScheduleKind { logstar, fast };

struct RegularitySpec {
    Rat alpha;
    Rat beta;
    uint64_t seed = 0;
    ScheduleKind schedule = ScheduleKind::logstar;
};

// 0 < alpha <= beta <= 1 required.
void validate_spec(const RegularitySpec& spec);

// Parity driver value for block n >= 1.
unsigned schedule_driver(ScheduleKind kind, uint64_t n);

// gamma for block n: odd driver -> (1-alpha)/alpha, even -> (1-beta)/beta.
Rat block_gamma(const RegularitySpec& spec, uint64_t n);

struct BlockRecord {
    uint64_t n = 0;
    uint64_t r_len = 0;       // 2n - 1
    unsigned driver = 0;
    Rat gamma;
    BigInt k;                 // ceil(r_len * gamma)
    BigInt random_end;        // |r_1 ... r_n| = n^2
    BigInt end;               // |w_n| including padding
};

// Arithmetic-only ledger of the first max_blocks blocks; no bits are drawn.
std::vector<BlockRecord> build_ledger(const RegularitySpec& spec, uint64_t max_blocks);

struct SandwichReport {
    bool pass = true;
    uint64_t violations = 0;
    // Smallest slack seen on each side, in positions.
    double worst_lower_margin = 0;
    double worst_upper_margin = 0;
};

// Checks (1/beta)(n-1)^2 <= |w_n| <= (1/alpha)(n+1)^2 at every boundary.
SandwichReport sandwich_check(const RegularitySpec& spec, const std::vector<BlockRecord>& ledger);

struct RegularityPrefix {
    Bits bits;
    std::vector<BlockRecord> ledger;  // blocks fully emitted
};

// Emits the first target_length bits of S, drawing r_n from a fair seeded
// coin.
RegularityPrefix build_prefix(const RegularitySpec& spec, std::size_t target_length);

}  // namespace galedim
