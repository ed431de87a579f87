#include "galedim/fsg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "galedim/errors.hpp"

namespace galedim {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

FiniteStateGambler::FiniteStateGambler(std::vector<std::string> state_names,
                                       std::vector<std::array<std::size_t, 2>> transition,
                                       std::vector<std::vector<RatBetPair>> betting,
                                       std::vector<Rat> initial_capitals,
                                       std::size_t initial_state)
    : names_(std::move(state_names)),
      transition_(std::move(transition)),
      betting_(std::move(betting)),
      initial_(std::move(initial_capitals)),
      initial_state_(initial_state) {
    std::size_t q = transition_.size();
    if (q == 0) throw StructureError("gambler needs at least one state");
    if (names_.size() != q) throw StructureError("state name count does not match transitions");
    if (initial_state_ >= q) throw StructureError("initial state out of range");
    for (const auto& t : transition_)
        if (t[0] >= q || t[1] >= q) throw StructureError("transition target out of range");
    if (betting_.empty()) throw StructureError("gambler needs at least one account");
    if (initial_.size() != betting_.size())
        throw StructureError("initial capital count does not match account count");
    for (const auto& account : betting_) {
        if (account.size() != q) throw StructureError("betting table must cover every state");
        for (const auto& bp : account)
            if (bp.on0 < 0 || bp.on0 > 1 || bp.on1 < 0 || bp.on1 > 1)
                throw StructureError("bets must lie in [0,1]");
    }
    for (const Rat& c : initial_)
        if (c < 0) throw StructureError("initial capitals must be nonnegative");
}

std::size_t FiniteStateGambler::run_state(const Bits& w) const {
    std::size_t q = initial_state_;
    for (uint8_t b : w) q = transition_[q][b];
    return q;
}

std::vector<Rat> FiniteStateGambler::account_capitals(const Bits& w) const {
    std::vector<Rat> m = initial_;
    std::size_t q = initial_state_;
    for (uint8_t b : w) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            const RatBetPair& bp = betting_[i][q];
            m[i] *= b ? bp.on1 : bp.on0;
        }
        q = transition_[q][b];
    }
    return m;
}

FiniteStateGambler::Check FiniteStateGambler::check() const {
    for (std::size_t i = 0; i < betting_.size(); ++i)
        for (std::size_t q = 0; q < transition_.size(); ++q)
            if (betting_[i][q].on0 + betting_[i][q].on1 != 1)
                return {false, "account " + std::to_string(i + 1) + " at state '" + names_[q] +
                                   "' has bets summing to " +
                                   rat_to_string(betting_[i][q].on0 + betting_[i][q].on1)};
    return {true, ""};
}

namespace {

class FsgRule final : public BetRule {
public:
    explicit FsgRule(FiniteStateGambler g) : g_(std::move(g)) {}

    BetPair bets_at(const Bits& w) const override {
        RatBetPair bp = bets_at_exact(w);
        return {rat_to_double(bp.on0), rat_to_double(bp.on1)};
    }

    bool exact() const override { return true; }

    RatBetPair bets_at_exact(const Bits& w) const override {
        std::vector<Rat> m = g_.account_capitals(w);
        std::size_t q = g_.run_state(w);
        Rat den(0), num0(0), num1(0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            den += m[i];
            num0 += m[i] * g_.betting()[i][q].on0;
            num1 += m[i] * g_.betting()[i][q].on1;
        }
        if (den == 0) return {Rat(1, 2), Rat(1, 2)};
        return {num0 / den, num1 / den};
    }

    std::unique_ptr<RuleCursor> cursor() const override;

    nlohmann::json to_json() const override { return {{"type", "fsg"}}; }

    const FiniteStateGambler& gambler() const { return g_; }

private:
    friend class FsgCursor;
    FiniteStateGambler g_;
};

class FsgCursor final : public RuleCursor {
public:
    explicit FsgCursor(const FsgRule* rule) : rule_(rule), q_(rule->g_.initial_state()) {
        for (const Rat& c : rule_->g_.initial_capitals()) caps_.push_back(rat_to_double(c));
        bets0_.resize(caps_.size());
        bets1_.resize(caps_.size());
        refresh();
    }

    BetPair bets() override { return combined_; }

    void advance(uint8_t b) override {
        double mx = 0;
        for (std::size_t i = 0; i < caps_.size(); ++i) {
            caps_[i] *= b ? bets1_[i] : bets0_[i];
            mx = std::max(mx, caps_[i]);
        }
        if (mx > 0 && (mx < 0x1p-512 || mx > 0x1p512))
            for (double& c : caps_) c /= mx;
        q_ = rule_->g_.transition()[q_][b];
        refresh();
    }

private:
    void refresh() {
        double den = 0, num0 = 0, num1 = 0;
        for (std::size_t i = 0; i < caps_.size(); ++i) {
            const RatBetPair& bp = rule_->g_.betting()[i][q_];
            bets0_[i] = rat_to_double(bp.on0);
            bets1_[i] = rat_to_double(bp.on1);
            den += caps_[i];
            num0 += caps_[i] * bets0_[i];
            num1 += caps_[i] * bets1_[i];
        }
        combined_ = den > 0 ? BetPair{num0 / den, num1 / den} : BetPair{0.5, 0.5};
    }

    const FsgRule* rule_;
    std::size_t q_;
    std::vector<double> caps_;
    std::vector<double> bets0_, bets1_;
    BetPair combined_;
};

std::unique_ptr<RuleCursor> FsgRule::cursor() const { return std::make_unique<FsgCursor>(this); }

}  // namespace

SGale induced_gale(const FiniteStateGambler& g, const Rat& s) {
    Rat total(0);
    for (const Rat& c : g.initial_capitals()) total += c;
    double log2_init = total == 0 ? -kInf : std::log2(rat_to_double(total));
    return SGale(s, GaleKind::gale, std::make_shared<FsgRule>(g), log2_init, Root2Rat(total));
}

double success_exponent_search(const FiniteStateGambler& g, const Bits& prefix,
                               SuccessMode mode) {
    if (prefix.size() < 64) throw DomainError("success search needs a prefix of length >= 64");
    Rat total0(0);
    for (const Rat& c : g.initial_capitals()) total0 += c;
    if (total0 == 0) throw DomainError("success search needs positive initial capital");

    // Reduced log-capital trace M(j) = log2 sum_i m_i(w|j); the induced
    // s-gale's log capital is s*j + M(j), so one trace serves every s.
    std::size_t n = prefix.size();
    std::vector<double> M(n + 1);
    std::vector<double> caps;
    for (const Rat& c : g.initial_capitals()) caps.push_back(rat_to_double(c));
    double scale = 0;
    {
        double sum = 0;
        for (double c : caps) sum += c;
        M[0] = std::log2(sum);
    }
    std::size_t q = g.initial_state();
    for (std::size_t j = 0; j < n; ++j) {
        uint8_t b = prefix[j];
        double mx = 0, sum = 0;
        for (std::size_t i = 0; i < caps.size(); ++i) {
            const RatBetPair& bp = g.betting()[i][q];
            caps[i] *= rat_to_double(b ? bp.on1 : bp.on0);
            mx = std::max(mx, caps[i]);
            sum += caps[i];
        }
        if (mx > 0 && (mx < 0x1p-512 || mx > 0x1p512)) {
            for (double& c : caps) c /= mx;
            scale += std::log2(mx);
            sum /= mx;
            M[j + 1] = scale + std::log2(sum);
        } else {
            M[j + 1] = sum > 0 ? scale + std::log2(sum) : -kInf;
        }
        q = g.transition()[q][b];
    }

    std::size_t w0 = std::max<std::size_t>(1, window_start(n));
    double bar = M[0] + 1.0 - 1e-12;
    auto succeeds = [&](double s) {
        double agg = mode == SuccessMode::io ? -kInf : kInf;
        for (std::size_t j = w0; j <= n; ++j) {
            double lc = M[j] == -kInf ? -kInf : s * static_cast<double>(j) + M[j];
            agg = mode == SuccessMode::io ? std::max(agg, lc) : std::min(agg, lc);
        }
        return agg >= bar;
    };

    if (succeeds(0.0)) return 0.0;
    if (!succeeds(1.0)) return 1.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-3) {
        double mid = 0.5 * (lo + hi);
        (succeeds(mid) ? hi : lo) = mid;
    }
    return hi;
}

FiniteStateGambler constant_gambler(const Rat& on0) {
    return FiniteStateGambler({"q"}, {{0, 0}}, {{{on0, Rat(1) - on0}}}, {Rat(1)});
}

FiniteStateGambler repeat_gambler(const Rat& on_repeat) {
    Rat other = Rat(1) - on_repeat;
    return FiniteStateGambler({"last0", "last1"}, {{0, 1}, {0, 1}},
                              {{{on_repeat, other}, {other, on_repeat}}}, {Rat(1)});
}

FiniteStateGambler counter_gambler(const Rat& lean) {
    Rat other = Rat(1) - lean;
    return FiniteStateGambler(
        {"lean0", "mid", "lean1"}, {{0, 1}, {0, 2}, {1, 2}},
        {{{lean, other}, {Rat(1, 2), Rat(1, 2)}, {other, lean}}}, {Rat(1)}, 1);
}

FiniteStateGambler pair_gambler(const Rat& on_match) {
    Rat other = Rat(1) - on_match;
    Rat half(1, 2);
    // States name the previous two bits, older bit first.
    return FiniteStateGambler(
        {"00", "01", "10", "11"}, {{0, 1}, {2, 3}, {0, 1}, {2, 3}},
        {{{on_match, other}, {half, half}, {half, half}, {other, on_match}}}, {Rat(1)});
}

FiniteStateGambler combine_accounts(const std::vector<FiniteStateGambler>& gs) {
    if (gs.empty()) throw DomainError("combine needs at least one gambler");
    std::size_t product = 1;
    for (const auto& g : gs) {
        if (product > 4096 / g.num_states())
            throw ResourceError("combined state space exceeds 4096 states");
        product *= g.num_states();
    }

    // State index encodes the tuple of component states, first component in
    // the lowest mixed-radix digit.
    auto decode = [&](std::size_t idx) {
        std::vector<std::size_t> tuple(gs.size());
        for (std::size_t c = 0; c < gs.size(); ++c) {
            tuple[c] = idx % gs[c].num_states();
            idx /= gs[c].num_states();
        }
        return tuple;
    };
    auto encode = [&](const std::vector<std::size_t>& tuple) {
        std::size_t idx = 0, radix = 1;
        for (std::size_t c = 0; c < gs.size(); ++c) {
            idx += tuple[c] * radix;
            radix *= gs[c].num_states();
        }
        return idx;
    };

    std::vector<std::string> names(product);
    std::vector<std::array<std::size_t, 2>> transition(product);
    for (std::size_t idx = 0; idx < product; ++idx) {
        auto tuple = decode(idx);
        std::string name;
        std::vector<std::size_t> next0(gs.size()), next1(gs.size());
        for (std::size_t c = 0; c < gs.size(); ++c) {
            if (c) name += '|';
            name += gs[c].state_names()[tuple[c]];
            next0[c] = gs[c].transition()[tuple[c]][0];
            next1[c] = gs[c].transition()[tuple[c]][1];
        }
        names[idx] = name;
        transition[idx] = {encode(next0), encode(next1)};
    }

    std::vector<std::vector<RatBetPair>> betting;
    std::vector<Rat> initial;
    for (std::size_t c = 0; c < gs.size(); ++c) {
        for (std::size_t a = 0; a < gs[c].num_accounts(); ++a) {
            std::vector<RatBetPair> row(product);
            for (std::size_t idx = 0; idx < product; ++idx)
                row[idx] = gs[c].betting()[a][decode(idx)[c]];
            betting.push_back(std::move(row));
            initial.push_back(gs[c].initial_capitals()[a]);
        }
    }

    std::vector<std::size_t> start(gs.size());
    for (std::size_t c = 0; c < gs.size(); ++c) start[c] = gs[c].initial_state();
    return FiniteStateGambler(std::move(names), std::move(transition), std::move(betting),
                              std::move(initial), encode(start));
}

std::vector<std::pair<std::string, FiniteStateGambler>> standard_gamblers() {
    std::vector<std::pair<std::string, FiniteStateGambler>> out;
    out.emplace_back("const-1/2", constant_gambler(Rat(1, 2)));
    for (int num = 5; num <= 7; ++num) {
        Rat level(num, 8);
        std::string tag = std::to_string(num) + "/8";
        out.emplace_back("const-" + tag + "-on0", constant_gambler(level));
        out.emplace_back("const-" + tag + "-on1", constant_gambler(Rat(1) - level));
    }
    out.emplace_back("repeat-3/4", repeat_gambler(Rat(3, 4)));
    out.emplace_back("counter-3/4", counter_gambler(Rat(3, 4)));
    out.emplace_back("pair-3/4", pair_gambler(Rat(3, 4)));
    out.emplace_back("combined",
                     combine_accounts({constant_gambler(Rat(1, 2)), constant_gambler(Rat(3, 4)),
                                       constant_gambler(Rat(1, 4)), repeat_gambler(Rat(3, 4))}));
    return out;
}

}  // namespace galedim
