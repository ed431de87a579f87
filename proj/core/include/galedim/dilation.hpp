#pragma once

#include <functional>
#include <optional>
#include <string>

#include "galedim/bias.hpp"
#include "galedim/bits.hpp"
#include "galedim/rational.hpp"

namespace galedim {

// Length-lexicographic enumeration of binary strings: empty, 0, 1, 00, 01,
// 10, 11, 000, ... The string of length L with value v has index
// 2^L - 1 + v.
BigInt index_of(const Bits& w);
Bits string_at(const BigInt& index);

// Strictly increasing map on strings under the enumeration order. The
// constructor does not prove monotonicity; callers rely on it and the tests
// probe it on samples.
class IncreasingMap {
public:
    IncreasingMap(std::function<Bits(const Bits&)> fn, std::string label);

    Bits apply(const Bits& x) const { return fn_(x); }
    // n_f: the index of f(s_n).
    BigInt index_image(const BigInt& n) const;
    const std::string& label() const { return label_; }

    // Preimage of s_idx under f, if idx lies in the range of f. Binary
    // search over [0, idx] using monotonicity of index_image.
    std::optional<BigInt> preimage_index(const BigInt& idx) const;

    static IncreasingMap identity();
    // g_k(x) = 0^(|x|^k) 1 x, k >= 1.
    static IncreasingMap g_k(unsigned k);

private:
    std::function<Bits(const Bits&)> fn_;
    std::string label_;
};

// Keeps bit i of w exactly when member(i) holds, preserving order.
Bits restrict_bits(const Bits& w, const std::function<bool(std::size_t)>& member);

// beta^f with (beta^f)_n = beta_(index of f(s_n)).
BiasSequence dilate_bias(const BiasSequence& beta, const IncreasingMap& f);

// f^d(w) = d(w restricted to range(f)); transports a beta^f-martingale to a
// beta-martingale.
BetaMartingale dilate_martingale(const BetaMartingale& d, const IncreasingMap& f);

}  // namespace galedim
