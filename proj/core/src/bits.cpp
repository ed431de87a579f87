#include "galedim/bits.hpp"

#include <algorithm>

namespace galedim {

Bits bits_from_string(const std::string& s) {
    Bits out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '0') {
            out.push_back(0);
        } else if (c == '1') {
            out.push_back(1);
        } else {
            throw DomainError(std::string("invalid bit character '") + c + "'");
        }
    }
    return out;
}

std::string bits_to_string(const Bits& w) {
    std::string out;
    out.reserve(w.size());
    for (uint8_t b : w) out.push_back(b ? '1' : '0');
    return out;
}

Bits prefix_of(const Bits& w, std::size_t n) {
    if (n > w.size()) throw DomainError("prefix length exceeds string length");
    return Bits(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
}

bool is_prefix(const Bits& p, const Bits& w) {
    if (p.size() > w.size()) return false;
    return std::equal(p.begin(), p.end(), w.begin());
}

bool is_prefix_set(const std::vector<Bits>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (i == j) continue;
            if (is_prefix(set[i], set[j])) return false;
        }
    }
    return true;
}

std::size_t window_start(std::size_t n) { return (n + 1) / 2; }

}  // namespace galedim
