#include "galedim/dilation.hpp"

#include <utility>

#include "galedim/errors.hpp"

namespace galedim {

BigInt index_of(const Bits& w) {
    BigInt value(0);
    for (uint8_t b : w) {
        value <<= 1;
        if (b) value += 1;
    }
    return (BigInt(1) << w.size()) - 1 + value;
}

Bits string_at(const BigInt& index) {
    if (index < 0) throw DomainError("string index must be nonnegative");
    BigInt shifted = index + 1;
    std::size_t len = boost::multiprecision::msb(shifted);  // shifted >= 1
    BigInt value = shifted - (BigInt(1) << len);
    Bits w(len);
    for (std::size_t i = 0; i < len; ++i)
        w[len - 1 - i] = static_cast<uint8_t>(boost::multiprecision::bit_test(value, unsigned(i)));
    return w;
}

IncreasingMap::IncreasingMap(std::function<Bits(const Bits&)> fn, std::string label)
    : fn_(std::move(fn)), label_(std::move(label)) {
    if (!fn_) throw DomainError("null map");
}

BigInt IncreasingMap::index_image(const BigInt& n) const { return index_of(fn_(string_at(n))); }

std::optional<BigInt> IncreasingMap::preimage_index(const BigInt& idx) const {
    // index_image(n) >= n, so any preimage lies in [0, idx].
    if (idx < 0) return std::nullopt;
    BigInt lo(0), hi = idx;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (index_image(mid) < idx)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (index_image(lo) == idx) return lo;
    return std::nullopt;
}

IncreasingMap IncreasingMap::identity() {
    return IncreasingMap([](const Bits& x) { return x; }, "identity");
}

IncreasingMap IncreasingMap::g_k(unsigned k) {
    if (k < 1) throw DomainError("g_k needs k >= 1");
    return IncreasingMap(
        [k](const Bits& x) {
            std::size_t pad = 1;
            for (unsigned i = 0; i < k; ++i) {
                if (x.size() != 0 && pad > (std::size_t(1) << 40) / x.size())
                    throw ResourceError("g_k output too long");
                pad *= x.size();
            }
            Bits out(pad, 0);
            out.push_back(1);
            out.insert(out.end(), x.begin(), x.end());
            return out;
        },
        "g_" + std::to_string(k));
}

Bits restrict_bits(const Bits& w, const std::function<bool(std::size_t)>& member) {
    Bits out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (member(i)) out.push_back(w[i]);
    return out;
}

BiasSequence dilate_bias(const BiasSequence& beta, const IncreasingMap& f) {
    return BiasSequence::custom(
        [beta, f](const BigInt& n) { return beta.at(f.index_image(n)); }, beta.lower_bound(),
        beta.upper_bound(), beta.label() + "^" + f.label());
}

BetaMartingale dilate_martingale(const BetaMartingale& d, const IncreasingMap& f) {
    auto restrict_to_range = [f](const Bits& w) {
        return restrict_bits(
            w, [&](std::size_t i) { return f.preimage_index(BigInt(i)).has_value(); });
    };
    BetaMartingale out;
    if (d.value)
        out.value = [d, restrict_to_range](const Bits& w) { return d.value(restrict_to_range(w)); };
    if (d.value_exact)
        out.value_exact = [d, restrict_to_range](const Bits& w) {
            return d.value_exact(restrict_to_range(w));
        };
    return out;
}

}  // namespace galedim
