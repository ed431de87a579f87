#pragma once

#include <memory>
#include <string>
#include <vector>

#include "galedim/bias.hpp"
#include "galedim/bits.hpp"
#include "galedim/gale.hpp"
#include "galedim/rational.hpp"

namespace galedim {

// Stateful scanner used by loss traces; advancing is O(1) amortized for the
// built-in predictors even when prob(w,b) rescans its whole context.
class PredictorCursor {
public:
    virtual ~PredictorCursor() = default;
    virtual double prob(uint8_t b) = 0;
    virtual void advance(uint8_t b) = 0;
};

// Next-bit probability assigner: prob(w,0) + prob(w,1) = 1 at every node.
class Predictor {
public:
    virtual ~Predictor() = default;
    virtual double prob(const Bits& w, uint8_t b) const = 0;
    virtual bool exact() const { return false; }
    virtual Rat prob_exact(const Bits& w, uint8_t b) const;
    virtual std::unique_ptr<PredictorCursor> cursor() const;
    virtual nlohmann::json to_json() const = 0;
};

using PredictorPtr = std::shared_ptr<const Predictor>;

PredictorPtr constant_predictor(const Rat& p1);
PredictorPtr measure_predictor(const BiasSequence& beta);
// Missing nodes predict 1/2; probabilities are of the bit 1.
PredictorPtr table_predictor(std::size_t depth,
                             std::vector<std::pair<std::string, Rat>> entries);
// Add-half estimator: prob of 1 is (ones(w) + 1/2) / (|w| + 1).
PredictorPtr laplace_predictor();

// Weighted product-measure mixture. Component j carries weight 2^-(2j+3) on
// the measure its predictions induce, plus a uniform floor 2^-(2m+1) at
// depth m; conditionals are normalized. Guarantees, for every component j,
//     log_loss(mixture, w) <= log_loss(pi_j, w) + 2j + 3.
PredictorPtr mixture_predictor(std::vector<PredictorPtr> components);

double log_loss(const Predictor& pi, const Bits& w);

// mu[pi](w), the product of the predicted probabilities of the realized
// bits. Exact components only.
Rat predictor_measure_exact(const Predictor& pi, const Bits& w);

struct LossTrace {
    std::vector<double> cumulative;  // cumulative[m] = loss on first m bits
    double rate_lower = 0, rate_upper = 0;      // min/max loss/m over the window
    double success_total = 0;                   // sum of probs of realized bits
    double success_rate = 0;                    // success_total / n
    double pred_lower = 0, pred_upper = 0;      // min/max running success ratio
    std::size_t window_lo = 0, window_hi = 0;
};

// window_lo_override = 0 means the default window [ceil(n/2), n].
LossTrace log_loss_trace(const Predictor& pi, const Bits& w, std::size_t window_lo_override = 0);

// pi_plus(w)/|w|; |w| must be positive.
double success_rate(const Predictor& pi, const Bits& w);

// Martingale d(w) = 2^|w| mu[pi](w), so log2 d(w) = |w| - log_loss(pi, w).
SGale to_martingale(const PredictorPtr& pi);

// Inverse: pi(w,b) = d(wb)/(2 d(w)). d must be a martingale (s = 1, kind
// gale); querying a zero-capital node raises a domain error.
PredictorPtr from_martingale(const SGale& d);

// Predictability/dimension consistency: 2(1-p) <= d <= H(p), each side
// allowed the given slack.
struct BoundCheck {
    double p = 0, d = 0, slack = 0;
    double lower = 0;  // 2(1-p)
    double upper = 0;  // H(p)
    bool holds_lower = false;
    bool holds_upper = false;
    bool pass = false;
};
BoundCheck bound_check(double p, double d, double slack = 0.0);

}  // namespace galedim
