#pragma once

// Exact scalar arithmetic for capital bookkeeping.
//
// Capitals produced by betting at exponent s multiply by 2^s per step.  When s
// is an integer or a half-integer every reachable value lies in the ring
// Q[sqrt(2)] = { a + b*sqrt(2) : a, b rational }, which is closed under ring
// operations and admits exact sign tests.  Root2Rat implements that ring on
// top of arbitrary-precision rationals.

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "galedim/errors.hpp"

namespace galedim {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" (optionally signed); rejects q == 0.
Rat parse_rat(const std::string& text);

// Canonical "p/q" form; integers print without the "/q" part.
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

// 2^k as an exact rational, k may be negative.
Rat pow2_rat(long long k);

// Smallest k >= 0 with 2^k >= x (x > 0), i.e. ceil(log2(x)) for x >= 1.
long long ceil_log2(const Rat& x);

// An exponent restricted to halves: value = twice/2.  This is the granularity
// at which exact capital tracking is supported.
struct HalfExp {
    long long twice = 0;

    double value() const { return static_cast<double>(twice) / 2.0; }
    HalfExp operator-() const { return HalfExp{-twice}; }
    HalfExp operator-(HalfExp o) const { return HalfExp{twice - o.twice}; }
    HalfExp operator+(HalfExp o) const { return HalfExp{twice + o.twice}; }
    bool operator==(const HalfExp&) const = default;
};

// Returns the half-integer form of r if its denominator divides 2.
std::optional<HalfExp> as_half_exp(const Rat& r);

// a + b*sqrt(2) with exact rational coefficients.
class Root2Rat {
public:
    Root2Rat() = default;
    Root2Rat(Rat a) : a_(std::move(a)) {}          // NOLINT: implicit from rational
    Root2Rat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static Root2Rat sqrt2() { return Root2Rat(Rat(0), Rat(1)); }

    const Rat& rational_part() const { return a_; }
    const Rat& root2_part() const { return b_; }

    // True when the value lies in Q.
    bool is_rational() const { return b_ == 0; }
    // Only valid when is_rational().
    const Rat& as_rational() const;

    Root2Rat operator+(const Root2Rat& o) const { return {a_ + o.a_, b_ + o.b_}; }
    Root2Rat operator-(const Root2Rat& o) const { return {a_ - o.a_, b_ - o.b_}; }
    Root2Rat operator*(const Root2Rat& o) const {
        return {a_ * o.a_ + 2 * (b_ * o.b_), a_ * o.b_ + b_ * o.a_};
    }
    Root2Rat& operator+=(const Root2Rat& o) { return *this = *this + o; }
    Root2Rat& operator-=(const Root2Rat& o) { return *this = *this - o; }
    Root2Rat& operator*=(const Root2Rat& o) { return *this = *this * o; }

    // Multiplies by 2^(e.twice / 2) exactly.
    Root2Rat times_pow2(HalfExp e) const;

    // Sign of a + b*sqrt(2): -1, 0, or +1, decided without approximation.
    int sign() const;

    bool operator==(const Root2Rat& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator<(const Root2Rat& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Root2Rat& o) const { return (*this - o).sign() <= 0; }

    double to_double() const;
    std::string to_string() const;

private:
    Rat a_{0};
    Rat b_{0};
};

}  // namespace galedim
