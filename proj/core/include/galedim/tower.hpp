#pragma once

// Iterated-exponential towers and the iterated logarithm.
//
// t_0 = 1 and t_{j+1} = 2^{t_j}, so t = 1, 2, 4, 16, 65536, 2^65536, ...
// log_star(n) = min{ j : t_j >= n }.  t_5 already has 65537 bits, and t_6
// cannot be materialized at all (it would need 2^65536 bits), so towers are
// stored exactly only up to index 5; log_star handles any input by clamping
// to 6 beyond t_5.

#include <cstdint>

#include "galedim/rational.hpp"

namespace galedim {

inline constexpr int kMaxTowerIndex = 5;

// t_j for 0 <= j <= kMaxTowerIndex, exact.
const BigInt& tower(int j);

// min{ j : t_j >= n }; returns 6 for n > t_5.  log_star(0) = log_star(1) = 0.
int log_star(const BigInt& n);
int log_star(uint64_t n);

// floor(log2(n)) for n >= 1.
int floor_log2(uint64_t n);

}  // namespace galedim
