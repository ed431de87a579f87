#pragma once

// Bias sequences and the product measures they induce.
//
// A bias sequence assigns position i a rational bias beta_i in (0,1); bit i
// of a sampled sequence is 1 with probability beta_i independently.  The
// per-bit self-information of an outcome is
//     xi_i = -log2(1 - beta_i)  if the bit is 0,
//     xi_i = -log2(beta_i)      if the bit is 1,
// so the running total over a prefix equals -log2 of its measure.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "galedim/bits.hpp"
#include "galedim/rational.hpp"

namespace galedim {

enum class BiasKind { constant, periodic, table, tower, custom };

class BiasSequence {
public:
    // beta_i = beta for all i.
    static BiasSequence constant(Rat beta);
    // beta_i = values[i mod |values|].
    static BiasSequence periodic(std::vector<Rat> values);
    // beta_i = values[i]; querying past the end is an error.
    static BiasSequence table(std::vector<Rat> values);
    // beta_i = kappa_even or kappa_odd according to the parity of the iterated
    // logarithm of i.
    static BiasSequence tower_alternating(Rat kappa_even, Rat kappa_odd);
    // Arbitrary generator with declared bounds.
    static BiasSequence custom(std::function<Rat(const BigInt&)> fn, Rat lo, Rat hi,
                               std::string label);

    Rat at(const BigInt& i) const;
    Rat at(std::size_t i) const { return at(BigInt(i)); }
    double at_double(std::size_t i) const;

    // Declared bounds: 0 < lower <= beta_i <= upper < 1 for all i.
    const Rat& lower_bound() const { return lo_; }
    const Rat& upper_bound() const { return hi_; }

    BiasKind kind() const { return kind_; }
    const std::vector<Rat>& values() const { return values_; }  // periodic/table
    const std::string& label() const { return label_; }

private:
    BiasSequence() = default;

    BiasKind kind_ = BiasKind::constant;
    std::vector<Rat> values_;
    std::function<Rat(const BigInt&)> fn_;
    Rat lo_, hi_;
    std::string label_;
};

// Binary Shannon entropy in bits; H(0) = H(1) = 0.
double shannon_entropy(double beta);
double shannon_entropy(const Rat& beta);

struct EntropyWindow {
    double h_n = 0;        // average of H(beta_i) over i < n
    double window_min = 0; // extremes of the running average over the tail window
    double window_max = 0;
    std::size_t window_lo = 0;
};
EntropyWindow avg_entropy(const BiasSequence& beta, std::size_t n);

// log2 of the measure of the cylinder at w; always <= 0.
double log2_measure(const BiasSequence& beta, const Bits& w);
// Exact product; cost grows with |w|, intended for short strings.
Rat measure_exact(const BiasSequence& beta, const Bits& w);

struct SelfInfoStats {
    std::size_t n = 0;
    double info = 0;         // -log2 measure of the prefix
    double expected = 0;     // n * (average entropy)
    double deviation = 0;    // info - expected
};
SelfInfoStats self_information(const BiasSequence& beta, const Bits& prefix);

// n independent draws, bit i ~ Bernoulli(beta_i), per the generator contract
// in rng.hpp.
Bits sample_sequence(const BiasSequence& beta, std::size_t n, uint64_t seed);

// Distribution of the prefix self-information by dynamic programming on a
// value grid of width 2^-20 bits.  probability = P[|info - expected| >= eps*n]
// up to grid rounding; value_error_bound bounds the total rounding applied to
// any single outcome's value.
struct ExactTail {
    double probability = 0;
    double value_error_bound = 0;
    std::size_t dp_states = 0;
};
inline constexpr std::size_t kTailExactMaxN = 4096;
ExactTail deviation_tail_exact(const BiasSequence& beta, std::size_t n, double eps);

struct McTail {
    double probability = 0;
    double std_error = 0;
    uint64_t trials = 0;
};
McTail deviation_tail_mc(const BiasSequence& beta, std::size_t n, double eps, uint64_t trials,
                         uint64_t seed);

// Exponential tail certificate: a theta > 0 such that for every bias in
// [delta, 1-delta] (grid step 1e-3) and both deviation directions,
//     E[e^{theta * eta}] < 1 - theta*eps/2  with  eta = +-(xi - H) - eps,
// which yields P[|info - n H| >= eps n] < 2 * alpha^n, alpha = 1 - theta*eps/2.
// theta maximizes the worst-case margin (the feasibility gap is concave in
// theta, so golden-section search applies).
struct ChernoffBound {
    double theta = 0;
    double alpha = 1;
    double margin = 0;  // worst-case slack of the defining inequality at theta
};
ChernoffBound chernoff_alpha(double delta, double eps);

inline double tail_bound(const ChernoffBound& cb, std::size_t n) {
    double b = 2.0;
    for (std::size_t i = 0; i < n; ++i) b *= cb.alpha;
    return b;
}

// Replaces each bias with a nearby dyadic-precision rational:
//     beta'_i = approx(i, m + i) - 2^-(m+i),  m = 2 + ceil(log2(1/delta)),
// where |approx(i, r) - beta_i| <= 2^-r.  Then beta'_i lies in [delta/2,
// beta_i] and sum (beta_i - beta'_i)^2 is finite with partial sums below
// rationalize_square_bound.
struct RationalizedBias {
    BiasSequence sequence;
    long long m = 0;
};
RationalizedBias rationalize(std::function<Rat(std::size_t, long long)> approx, const Rat& delta,
                             const Rat& declared_upper);
// Bound on sum_{i<k} (beta_i - beta'_i)^2, namely sum_{i<k} 4^{-(m+i)+1}.
Rat rationalize_square_bound(long long m, std::size_t k);

// A process adapted to a bias sequence: value(w) is the capital after |w|
// steps, fair when the conditional one-step mean is the current value:
//     value(w) = (1-beta_{|w|}) value(w0) + beta_{|w|} value(w1).
struct BetaMartingale {
    std::function<double(const Bits&)> value;
    std::function<Rat(const Bits&)> value_exact;  // may be empty
};

struct MartingaleCheck {
    bool pass = false;
    bool exact_mode = false;
    std::size_t nodes_checked = 0;
    double worst_abs = 0;
    double worst_rel = 0;
    std::string worst_node;
};
MartingaleCheck validate_beta_martingale(const BetaMartingale& d, const BiasSequence& beta,
                                         std::size_t depth, double rel_tol = 1e-9);

}  // namespace galedim
