#include "galedim/tower.hpp"

#include <array>
#include <bit>

namespace galedim {

namespace {

std::array<BigInt, kMaxTowerIndex + 1> make_towers() {
    std::array<BigInt, kMaxTowerIndex + 1> t;
    t[0] = 1;
    for (int j = 1; j <= kMaxTowerIndex; ++j) {
        // t_j = 2^{t_{j-1}}; exponents stay small enough to shift.
        t[j] = BigInt(1) << t[j - 1].convert_to<unsigned>();
    }
    return t;
}

const std::array<BigInt, kMaxTowerIndex + 1>& towers() {
    static const auto t = make_towers();
    return t;
}

}  // namespace

const BigInt& tower(int j) {
    if (j < 0 || j > kMaxTowerIndex) throw DomainError("tower index out of materialized range");
    return towers()[j];
}

int log_star(const BigInt& n) {
    for (int j = 0; j <= kMaxTowerIndex; ++j) {
        if (towers()[j] >= n) return j;
    }
    return kMaxTowerIndex + 1;
}

int log_star(uint64_t n) { return log_star(BigInt(n)); }

int floor_log2(uint64_t n) {
    if (n == 0) throw DomainError("floor_log2 needs n >= 1");
    return 63 - std::countl_zero(n);
}

}  // namespace galedim
