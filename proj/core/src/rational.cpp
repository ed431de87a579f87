#include "galedim/rational.hpp"

#include <cmath>

namespace galedim {

namespace mp = boost::multiprecision;

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw DomainError("cannot parse rational from empty string");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw DomainError("rational with zero denominator: " + text);
        return Rat(num, den);
    } catch (const std::exception& e) {
        throw DomainError("cannot parse rational '" + text + "': " + e.what());
    }
}

std::string rat_to_string(const Rat& r) {
    BigInt num = mp::numerator(r);
    BigInt den = mp::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

Rat pow2_rat(long long k) {
    if (k >= 0) return Rat(BigInt(1) << static_cast<unsigned>(k));
    return Rat(BigInt(1), BigInt(1) << static_cast<unsigned>(-k));
}

long long ceil_log2(const Rat& x) {
    if (x <= 0) throw DomainError("ceil_log2 needs a positive argument");
    BigInt num = mp::numerator(x);
    BigInt den = mp::denominator(x);
    long long k = 0;
    BigInt pow = den;  // compare 2^k * den >= num
    while (pow < num) {
        pow <<= 1;
        ++k;
    }
    return k;
}

std::optional<HalfExp> as_half_exp(const Rat& r) {
    BigInt den = mp::denominator(r);
    BigInt num = mp::numerator(r);
    if (den == 1) {
        BigInt t = num * 2;
        if (t > BigInt(INT64_MAX) || t < BigInt(INT64_MIN)) return std::nullopt;
        return HalfExp{t.convert_to<long long>()};
    }
    if (den == 2) {
        if (num > BigInt(INT64_MAX) || num < BigInt(INT64_MIN)) return std::nullopt;
        return HalfExp{num.convert_to<long long>()};
    }
    return std::nullopt;
}

const Rat& Root2Rat::as_rational() const {
    if (b_ != 0) throw DomainError("value has an irrational sqrt(2) component");
    return a_;
}

Root2Rat Root2Rat::times_pow2(HalfExp e) const {
    long long whole = e.twice >= 0 ? e.twice / 2 : -((-e.twice + 1) / 2);
    bool half = (e.twice - 2 * whole) != 0;  // leftover sqrt(2) factor
    Rat scale = pow2_rat(whole);
    Root2Rat out(a_ * scale, b_ * scale);
    if (half) out = out * sqrt2();
    return out;
}

int Root2Rat::sign() const {
    int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
    int sb = b_ == 0 ? 0 : (b_ > 0 ? 1 : -1);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2; the larger magnitude term wins.
    Rat lhs = a_ * a_;
    Rat rhs = 2 * (b_ * b_);
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
}

double Root2Rat::to_double() const {
    static const double kSqrt2 = std::sqrt(2.0);
    return rat_to_double(a_) + rat_to_double(b_) * kSqrt2;
}

std::string Root2Rat::to_string() const {
    if (b_ == 0) return rat_to_string(a_);
    return rat_to_string(a_) + " + " + rat_to_string(b_) + "*sqrt(2)";
}

}  // namespace galedim
