#pragma once

// Betting strategies with a rate handicap.
//
// An s-process starts with capital d(lambda) and bets a share of its stake on
// each next bit; after betting fraction b on the observed bit the capital
// becomes d(wb) = 2^s * d(w) * b.  The defining balance at every node is
//     d(w) >= 2^-s * (d(w0) + d(w1)),
// with equality for proper strategies ("gale") and slack allowed for
// mass-leaking ones ("supergale").  At s = 1 equality is the fair-martingale
// condition.  Capital arithmetic runs in log2 domain for long prefixes; an
// exact mode over Q[sqrt(2)] is available when the rule is rational and s is
// an integer or half-integer.

#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "galedim/bias.hpp"
#include "galedim/bits.hpp"
#include "galedim/rational.hpp"

namespace galedim {

enum class GaleKind { gale, supergale };

struct BetPair {
    double on0 = 0.5;
    double on1 = 0.5;
};

struct RatBetPair {
    Rat on0;
    Rat on1;
};

// Stateful walker used by trace evaluation; advancing is O(1) amortized even
// for rules whose per-node bets depend on the whole path.
class RuleCursor {
public:
    virtual ~RuleCursor() = default;
    virtual BetPair bets() = 0;
    virtual void advance(uint8_t b) = 0;
};

class BetRule {
public:
    virtual ~BetRule() = default;

    // Shares wagered on 0 and 1 at node w; each lies in [0,1].
    virtual BetPair bets_at(const Bits& w) const = 0;

    // True when bets_at_exact is available (all bets rational).
    virtual bool exact() const { return false; }
    virtual RatBetPair bets_at_exact(const Bits& w) const;

    // Rules defined only to a finite depth report it here.
    virtual std::optional<std::size_t> depth_limit() const { return std::nullopt; }

    virtual std::unique_ptr<RuleCursor> cursor() const;

    virtual nlohmann::json to_json() const;
};

class SGale {
public:
    // s given as a rational keeps the exact half-integer form when it has one.
    SGale(const Rat& s, GaleKind kind, std::shared_ptr<const BetRule> rule,
          double log2_initial = 0.0,
          std::optional<Root2Rat> initial_exact = Root2Rat(Rat(1)));
    SGale(double s, GaleKind kind, std::shared_ptr<const BetRule> rule,
          double log2_initial = 0.0,
          std::optional<Root2Rat> initial_exact = Root2Rat(Rat(1)));

    double s() const { return s_; }
    const std::optional<HalfExp>& s_half() const { return s_half_; }
    GaleKind kind() const { return kind_; }
    const BetRule& rule() const { return *rule_; }
    const std::shared_ptr<const BetRule>& rule_ptr() const { return rule_; }
    double log2_initial() const { return log2_initial_; }
    const std::optional<Root2Rat>& initial_exact() const { return initial_exact_; }

    // Exact capital tracking needs a rational rule, half-integer s, and an
    // exact initial capital.
    bool exact_capable() const {
        return rule_->exact() && s_half_.has_value() && initial_exact_.has_value();
    }

    nlohmann::json to_json() const;

private:
    double s_;
    std::optional<HalfExp> s_half_;
    GaleKind kind_;
    std::shared_ptr<const BetRule> rule_;
    double log2_initial_;
    std::optional<Root2Rat> initial_exact_;
};

struct EvaluationTrace {
    std::vector<double> log2_capital;  // entry n = log2 d(prefix[0..n-1]); entry 0 is initial
    std::size_t window_lo = 1;         // first index of the tail window [ceil(N/2), N]
    double max_log = 0;
    double tail_min_log = 0;
    double lower_exponent = 0;  // min over the window of log2_capital[n] / n
    double upper_exponent = 0;
};

// Walks the prefix once; a zero bet on the observed bit sends the capital to
// zero (log -inf) permanently.  Throws DomainError on malformed bets or when
// the prefix exceeds the rule's declared depth.
EvaluationTrace evaluate(const SGale& g, const Bits& prefix);

// Exact capitals along the prefix, entry n = d(prefix[0..n-1]).
std::vector<Root2Rat> evaluate_exact(const SGale& g, const Bits& prefix);

enum class ValidateMode { automatic, exact, approximate };

struct ValidationReport {
    bool pass = false;
    bool exact_mode = false;
    std::size_t nodes_checked = 0;
    double worst_abs = 0;  // violation of the balance in capital units
    double worst_rel = 0;
    std::string worst_node;
};

// Checks the balance condition at every node of depth < depth.  Exact mode
// compares capitals in Q[sqrt(2)] with zero tolerance; approximate mode uses
// the relative tolerance.
ValidationReport validate(const SGale& g, std::size_t depth,
                          ValidateMode mode = ValidateMode::automatic, double rel_tol = 1e-9);

struct KraftResult {
    double sum = 0;     // sum over u in B of 2^{-s|u|} d(wu)
    double budget = 0;  // d(w)
    bool holds = false;
    bool exact_mode = false;
};

// Mass accounting over a prefix set B rooted at w: the weighted capitals of
// the extensions never exceed the capital at the root.
KraftResult kraft_sum(const SGale& g, const std::vector<Bits>& B, const Bits& w = {});

// Convex combination with weights w_k; default w_k = 2^-k / d_k(lambda).  All
// components must share the same s; the result is a gale only when every
// component is.
SGale mix(const std::vector<SGale>& components);
SGale mix(const std::vector<SGale>& components, const std::vector<Rat>& weights);

// Same betting behaviour at exponent s - t: capitals scale by 2^{-t|w|}.
SGale scale_exponent(const SGale& g, const Rat& t);

// The strategy that always wagers the conditional probabilities of the bias
// sequence; at exponent s its capital is 2^{s|w|} * measure(w).
SGale gale_from_measure(const BiasSequence& beta, const Rat& s);

// Strategy refined from a finite cover: A is a set of distinct strings of one
// length n.  Up to depth n the capital at w is 2^{(s-s')|w|} times the
// s'-weight of the extensions of w lying in A; past depth n it grows by a
// factor 2^{s-1} per step.  Members of A reach capital 2^{(s-s')n}.
SGale cover_gale(const std::vector<Bits>& A, const Rat& s, const Rat& s_prime);

// Simple rule constructors.
std::shared_ptr<const BetRule> constant_rule(const Rat& on0, const Rat& on1);
std::shared_ptr<const BetRule> constant_rule(const Rat& on0);  // on1 = 1 - on0

// Finite table of bets keyed by node; nodes absent from the table bet 1/2,
// queries beyond the depth limit are errors.
std::shared_ptr<const BetRule> table_rule(
    std::size_t depth, std::vector<std::pair<std::string, RatBetPair>> entries);

}  // namespace galedim
