#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "galedim/bits.hpp"
#include "galedim/gale.hpp"
#include "galedim/rational.hpp"

namespace galedim {

// k-account finite-state gambler. One automaton reads bits; each account
// splits its capital over the next bit according to its per-state bets.
// Reduced account capitals evolve as
//     m_i(wb) = m_i(w) * betting(i, state(w), b)
// and the induced s-gale is d(w) = 2^(s|w|) * sum_i m_i(w).
class FiniteStateGambler {
public:
    // transition[q] = {next on 0, next on 1}; betting[i][q] = account i's
    // bets at state q. Shapes must agree; bet values are checked by check().
    FiniteStateGambler(std::vector<std::string> state_names,
                       std::vector<std::array<std::size_t, 2>> transition,
                       std::vector<std::vector<RatBetPair>> betting,
                       std::vector<Rat> initial_capitals, std::size_t initial_state = 0);

    std::size_t num_states() const { return transition_.size(); }
    std::size_t num_accounts() const { return betting_.size(); }
    std::size_t initial_state() const { return initial_state_; }
    const std::vector<std::string>& state_names() const { return names_; }
    const std::vector<std::array<std::size_t, 2>>& transition() const { return transition_; }
    const std::vector<std::vector<RatBetPair>>& betting() const { return betting_; }
    const std::vector<Rat>& initial_capitals() const { return initial_; }

    std::size_t run_state(const Bits& w) const;

    // Reduced per-account capitals m_i(w) (the 2^(s|w|) factor is omitted).
    std::vector<Rat> account_capitals(const Bits& w) const;

    // Per-(account, state) bet sums must equal 1 exactly. Returns the first
    // offender by account and state name when they do not.
    struct Check {
        bool pass = true;
        std::string message;
    };
    Check check() const;

private:
    std::vector<std::string> names_;
    std::vector<std::array<std::size_t, 2>> transition_;
    std::vector<std::vector<RatBetPair>> betting_;
    std::vector<Rat> initial_;
    std::size_t initial_state_;
};

// d(w) = 2^(s|w|) sum_i m_i(w), packaged as a gale whose bets are the
// capital-weighted account bets (independent of s).
SGale induced_gale(const FiniteStateGambler& g, const Rat& s);

enum class SuccessMode { io, ae };

// Least s in [0,1] (tolerance 1e-3) whose induced s-gale gains one bit over
// its initial capital inside the window [ceil(n/2), n]: the window maximum
// must clear the bar for io, the window minimum for ae. Returns 1.0 when even
// s=1 fails and 0.0 when s=0 already succeeds.
double success_exponent_search(const FiniteStateGambler& g, const Bits& prefix, SuccessMode mode);

// Bettor library. These give cheap certified upper bounds on the
// finite-state dimension of a given sequence; none of them is optimal.
FiniteStateGambler constant_gambler(const Rat& on0);
// Bets on_repeat on seeing the same bit again, remembering the last bit.
FiniteStateGambler repeat_gambler(const Rat& on_repeat);
// Saturating 3-state counter leaning toward the more recent majority bit.
FiniteStateGambler counter_gambler(const Rat& lean);
// Last two bits; bets on_match on the repeated bit when they agree.
FiniteStateGambler pair_gambler(const Rat& on_match);

// Product automaton running every input gambler in parallel, one account per
// input account, so the induced gale is the weighted sum of the inputs'.
FiniteStateGambler combine_accounts(const std::vector<FiniteStateGambler>& gs);

// The gamblers the CLI runs by default: constant bettors at levels
// 1/2, 5/8, 3/4, 7/8 in both directions, the context bettors above, and one
// combined all-accounts gambler.
std::vector<std::pair<std::string, FiniteStateGambler>> standard_gamblers();

}  // namespace galedim
