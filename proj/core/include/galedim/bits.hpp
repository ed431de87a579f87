#pragma once

// Binary string basics shared by every module.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "galedim/errors.hpp"

namespace galedim {

// A finite binary string; each element is 0 or 1.
using Bits = std::vector<uint8_t>;

Bits bits_from_string(const std::string& s);  // "0101" -> {0,1,0,1}
std::string bits_to_string(const Bits& w);

// First n bits of w (n <= |w|).
Bits prefix_of(const Bits& w, std::size_t n);

bool is_prefix(const Bits& p, const Bits& w);

// No element of the set is a proper prefix of another.  O(sum of lengths^2)
// pairwise scan; fine at the advertised scales.
bool is_prefix_set(const std::vector<Bits>& set);

// Start of the tail window [ceil(n/2), n] used for liminf/limsup proxies.
std::size_t window_start(std::size_t n);

}  // namespace galedim
