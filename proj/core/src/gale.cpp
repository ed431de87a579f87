#include "galedim/gale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "galedim/serialize.hpp"

namespace galedim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_bet(double b) {
    if (!std::isfinite(b) || b < 0.0 || b > 1.0 + 1e-9)
        throw DomainError("malformed bet (outside [0,1] or non-finite)");
}

void check_bet_exact(const Rat& b) {
    if (b < 0 || b > 1) throw DomainError("malformed exact bet (outside [0,1])");
}

double log2_clamped(double b) { return b <= 0.0 ? -kInf : std::log2(std::min(b, 1.0)); }

// Default cursor: remembers the path and asks the rule afresh at each node.
class PathCursor final : public RuleCursor {
public:
    explicit PathCursor(const BetRule* rule) : rule_(rule) {}
    BetPair bets() override { return rule_->bets_at(path_); }
    void advance(uint8_t b) override { path_.push_back(b); }

private:
    const BetRule* rule_;
    Bits path_;
};

}  // namespace

RatBetPair BetRule::bets_at_exact(const Bits&) const {
    throw DomainError("rule does not provide exact bets");
}

std::unique_ptr<RuleCursor> BetRule::cursor() const {
    return std::make_unique<PathCursor>(this);
}

nlohmann::json BetRule::to_json() const { return {{"type", "opaque"}}; }

SGale::SGale(const Rat& s, GaleKind kind, std::shared_ptr<const BetRule> rule,
             double log2_initial, std::optional<Root2Rat> initial_exact)
    : s_(rat_to_double(s)),
      s_half_(as_half_exp(s)),
      kind_(kind),
      rule_(std::move(rule)),
      log2_initial_(log2_initial),
      initial_exact_(std::move(initial_exact)) {
    if (s < 0) throw DomainError("exponent s must be nonnegative");
    if (!rule_) throw DomainError("null bet rule");
}

SGale::SGale(double s, GaleKind kind, std::shared_ptr<const BetRule> rule, double log2_initial,
             std::optional<Root2Rat> initial_exact)
    : s_(s),
      kind_(kind),
      rule_(std::move(rule)),
      log2_initial_(log2_initial),
      initial_exact_(std::move(initial_exact)) {
    if (!(s >= 0)) throw DomainError("exponent s must be nonnegative");
    if (!rule_) throw DomainError("null bet rule");
    double twice = 2.0 * s;
    if (twice == std::floor(twice) && std::abs(twice) < 0x1p62)
        s_half_ = HalfExp{static_cast<long long>(twice)};
}

nlohmann::json SGale::to_json() const {
    return {{"s", s_},
            {"kind", kind_ == GaleKind::gale ? "gale" : "supergale"},
            {"rule", rule_->to_json()}};
}

EvaluationTrace evaluate(const SGale& g, const Bits& prefix) {
    if (auto limit = g.rule().depth_limit(); limit && prefix.size() > *limit)
        throw DomainError("prefix exceeds the rule's declared depth");

    std::size_t n = prefix.size();
    EvaluationTrace t;
    t.log2_capital.resize(n + 1);
    t.log2_capital[0] = g.log2_initial();
    auto cur = g.rule().cursor();
    double s = g.s();
    for (std::size_t i = 0; i < n; ++i) {
        BetPair bp = cur->bets();
        check_bet(bp.on0);
        check_bet(bp.on1);
        double b = prefix[i] ? bp.on1 : bp.on0;
        double prev = t.log2_capital[i];
        t.log2_capital[i + 1] = (prev == -kInf) ? -kInf : prev + s + log2_clamped(b);
        cur->advance(prefix[i]);
    }

    t.window_lo = std::max<std::size_t>(1, window_start(n));
    if (n == 0) {
        t.max_log = t.tail_min_log = t.log2_capital[0];
        t.lower_exponent = t.upper_exponent = std::numeric_limits<double>::quiet_NaN();
        return t;
    }
    t.max_log = -kInf;
    t.tail_min_log = kInf;
    t.lower_exponent = kInf;
    t.upper_exponent = -kInf;
    for (std::size_t m = t.window_lo; m <= n; ++m) {
        double lc = t.log2_capital[m];
        t.max_log = std::max(t.max_log, lc);
        t.tail_min_log = std::min(t.tail_min_log, lc);
        double e = lc / static_cast<double>(m);
        t.lower_exponent = std::min(t.lower_exponent, e);
        t.upper_exponent = std::max(t.upper_exponent, e);
    }
    return t;
}

std::vector<Root2Rat> evaluate_exact(const SGale& g, const Bits& prefix) {
    if (!g.exact_capable())
        throw DomainError("gale does not support exact evaluation");
    if (auto limit = g.rule().depth_limit(); limit && prefix.size() > *limit)
        throw DomainError("prefix exceeds the rule's declared depth");

    std::vector<Root2Rat> caps;
    caps.reserve(prefix.size() + 1);
    caps.push_back(*g.initial_exact());
    HalfExp s = *g.s_half();
    Bits w;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        RatBetPair bp = g.rule().bets_at_exact(w);
        check_bet_exact(bp.on0);
        check_bet_exact(bp.on1);
        const Rat& b = prefix[i] ? bp.on1 : bp.on0;
        caps.push_back(caps.back().times_pow2(s) * Root2Rat(b));
        w.push_back(prefix[i]);
    }
    return caps;
}

namespace {

struct ValidateState {
    ValidationReport report;
    const SGale* g = nullptr;
    double rel_tol = 0;
};

void validate_exact_rec(ValidateState& st, Bits& w, const Root2Rat& cap, std::size_t depth) {
    if (w.size() >= depth) return;
    RatBetPair bp = st.g->rule().bets_at_exact(w);
    check_bet_exact(bp.on0);
    check_bet_exact(bp.on1);
    Rat share = bp.on0 + bp.on1;
    // deficit = d(w) - 2^-s (d(w0)+d(w1)) = d(w) * (1 - share)
    Root2Rat deficit = cap * Root2Rat(Rat(1) - share);
    int sign = deficit.sign();
    bool bad = st.g->kind() == GaleKind::gale ? sign != 0 : sign < 0;
    if (bad) {
        st.report.pass = false;
        double ad = std::abs(deficit.to_double());
        if (ad >= st.report.worst_abs) {
            st.report.worst_abs = ad;
            st.report.worst_rel = std::abs(rat_to_double(Rat(1) - share));
            st.report.worst_node = bits_to_string(w);
        }
    }
    ++st.report.nodes_checked;
    HalfExp s = *st.g->s_half();
    Root2Rat c0 = cap.times_pow2(s) * Root2Rat(bp.on0);
    Root2Rat c1 = cap.times_pow2(s) * Root2Rat(bp.on1);
    w.push_back(0);
    validate_exact_rec(st, w, c0, depth);
    w.back() = 1;
    validate_exact_rec(st, w, c1, depth);
    w.pop_back();
}

void validate_approx_rec(ValidateState& st, Bits& w, double cap, std::size_t depth) {
    if (w.size() >= depth) return;
    BetPair bp = st.g->rule().bets_at(w);
    check_bet(bp.on0);
    check_bet(bp.on1);
    double share = bp.on0 + bp.on1;
    double rel = st.g->kind() == GaleKind::gale ? std::abs(1.0 - share)
                                                : std::max(0.0, share - 1.0);
    if (cap > 0 && rel > st.report.worst_rel) {
        st.report.worst_rel = rel;
        st.report.worst_abs = rel * cap;
        st.report.worst_node = bits_to_string(w);
    }
    if (cap > 0 && rel > st.rel_tol) st.report.pass = false;
    ++st.report.nodes_checked;
    double step = std::exp2(st.g->s());
    w.push_back(0);
    validate_approx_rec(st, w, cap * step * bp.on0, depth);
    w.back() = 1;
    validate_approx_rec(st, w, cap * step * bp.on1, depth);
    w.pop_back();
}

}  // namespace

ValidationReport validate(const SGale& g, std::size_t depth, ValidateMode mode, double rel_tol) {
    if (auto limit = g.rule().depth_limit(); limit && depth > *limit)
        throw DomainError("validation depth exceeds the rule's declared depth");
    bool exact = false;
    switch (mode) {
        case ValidateMode::automatic:
            exact = g.exact_capable();
            break;
        case ValidateMode::exact:
            if (!g.exact_capable()) throw DomainError("gale does not support exact validation");
            exact = true;
            break;
        case ValidateMode::approximate:
            exact = false;
            break;
    }

    ValidateState st;
    st.g = &g;
    st.rel_tol = rel_tol;
    st.report.pass = true;
    st.report.exact_mode = exact;
    Bits w;
    if (exact) {
        validate_exact_rec(st, w, *g.initial_exact(), depth);
    } else {
        validate_approx_rec(st, w, std::exp2(g.log2_initial()), depth);
    }
    return st.report;
}

namespace {

// Capital after walking w from the root, in log2 domain.
double log2_capital_at(const SGale& g, const Bits& w) {
    double cap = g.log2_initial();
    Bits pref;
    for (uint8_t b : w) {
        BetPair bp = g.rule().bets_at(pref);
        check_bet(bp.on0);
        check_bet(bp.on1);
        double share = b ? bp.on1 : bp.on0;
        cap = (cap == -kInf) ? -kInf : cap + g.s() + log2_clamped(share);
        pref.push_back(b);
    }
    return cap;
}

Root2Rat capital_at_exact(const SGale& g, const Bits& w) {
    return evaluate_exact(g, w).back();
}

}  // namespace

KraftResult kraft_sum(const SGale& g, const std::vector<Bits>& B, const Bits& w) {
    if (!is_prefix_set(B)) throw StructureError("extension set is not a prefix set");
    if (auto limit = g.rule().depth_limit(); limit) {
        for (const Bits& u : B)
            if (w.size() + u.size() > *limit)
                throw DomainError("extension exceeds the rule's declared depth");
    }

    KraftResult out;
    out.exact_mode = g.exact_capable();
    if (out.exact_mode) {
        HalfExp s = *g.s_half();
        Root2Rat budget = capital_at_exact(g, w);
        Root2Rat sum(Rat(0));
        for (const Bits& u : B) {
            Bits wu = w;
            wu.insert(wu.end(), u.begin(), u.end());
            Root2Rat term = capital_at_exact(g, wu);
            long long k = -s.twice * static_cast<long long>(u.size());
            sum += term.times_pow2(HalfExp{k});
        }
        out.sum = sum.to_double();
        out.budget = budget.to_double();
        out.holds = sum <= budget;
    } else {
        double budget = std::exp2(log2_capital_at(g, w));
        double sum = 0;
        for (const Bits& u : B) {
            Bits wu = w;
            wu.insert(wu.end(), u.begin(), u.end());
            double lc = log2_capital_at(g, wu);
            if (lc != -kInf) sum += std::exp2(lc - g.s() * static_cast<double>(u.size()));
        }
        out.sum = sum;
        out.budget = budget;
        out.holds = sum <= budget * (1.0 + 1e-9) + 1e-12;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Mixtures

namespace {

class MixRule final : public BetRule {
public:
    MixRule(std::vector<std::shared_ptr<const BetRule>> rules, std::vector<double> winit_f,
            std::optional<std::vector<Rat>> winit_x, std::optional<std::size_t> depth)
        : rules_(std::move(rules)),
          winit_f_(std::move(winit_f)),
          winit_x_(std::move(winit_x)),
          depth_(depth) {}

    BetPair bets_at(const Bits& w) const override {
        std::size_t k = rules_.size();
        std::vector<double> r = winit_f_;
        Bits pref;
        pref.reserve(w.size());
        for (uint8_t b : w) {
            double mx = 0;
            for (std::size_t j = 0; j < k; ++j) {
                BetPair bp = rules_[j]->bets_at(pref);
                r[j] *= b ? bp.on1 : bp.on0;
                mx = std::max(mx, r[j]);
            }
            if (mx > 0)
                for (double& v : r) v /= mx;
            pref.push_back(b);
        }
        double den = 0, num0 = 0, num1 = 0;
        for (std::size_t j = 0; j < k; ++j) {
            BetPair bp = rules_[j]->bets_at(w);
            den += r[j];
            num0 += r[j] * bp.on0;
            num1 += r[j] * bp.on1;
        }
        if (den <= 0) return {0.5, 0.5};
        return {num0 / den, num1 / den};
    }

    bool exact() const override {
        if (!winit_x_) return false;
        for (const auto& rule : rules_)
            if (!rule->exact()) return false;
        return true;
    }

    RatBetPair bets_at_exact(const Bits& w) const override {
        if (!exact()) throw DomainError("mixture does not provide exact bets");
        std::size_t k = rules_.size();
        std::vector<Rat> r = *winit_x_;
        Bits pref;
        for (uint8_t b : w) {
            for (std::size_t j = 0; j < k; ++j) {
                RatBetPair bp = rules_[j]->bets_at_exact(pref);
                r[j] *= b ? bp.on1 : bp.on0;
            }
            pref.push_back(b);
        }
        Rat den(0), num0(0), num1(0);
        for (std::size_t j = 0; j < k; ++j) {
            RatBetPair bp = rules_[j]->bets_at_exact(w);
            den += r[j];
            num0 += r[j] * bp.on0;
            num1 += r[j] * bp.on1;
        }
        if (den == 0) return {Rat(1, 2), Rat(1, 2)};
        return {num0 / den, num1 / den};
    }

    std::optional<std::size_t> depth_limit() const override { return depth_; }

    std::unique_ptr<RuleCursor> cursor() const override;

    nlohmann::json to_json() const override {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& rule : rules_) comps.push_back(rule->to_json());
        return {{"type", "mix"}, {"components", comps}};
    }

private:
    friend class MixCursor;
    std::vector<std::shared_ptr<const BetRule>> rules_;
    std::vector<double> winit_f_;             // weight_k * d_k(lambda)
    std::optional<std::vector<Rat>> winit_x_; // same, when rational
    std::optional<std::size_t> depth_;
};

class MixCursor final : public RuleCursor {
public:
    explicit MixCursor(const MixRule* rule) : rule_(rule), r_(rule->winit_f_) {
        for (const auto& comp : rule_->rules_) curs_.push_back(comp->cursor());
    }

    BetPair bets() override {
        ensure();
        return combined_;
    }

    void advance(uint8_t b) override {
        ensure();
        double mx = 0;
        for (std::size_t j = 0; j < r_.size(); ++j) {
            r_[j] *= b ? last_[j].on1 : last_[j].on0;
            mx = std::max(mx, r_[j]);
            curs_[j]->advance(b);
        }
        if (mx > 0)
            for (double& v : r_) v /= mx;
        fresh_ = false;
    }

private:
    void ensure() {
        if (fresh_) return;
        last_.resize(curs_.size());
        double den = 0, num0 = 0, num1 = 0;
        for (std::size_t j = 0; j < curs_.size(); ++j) {
            last_[j] = curs_[j]->bets();
            den += r_[j];
            num0 += r_[j] * last_[j].on0;
            num1 += r_[j] * last_[j].on1;
        }
        combined_ = den > 0 ? BetPair{num0 / den, num1 / den} : BetPair{0.5, 0.5};
        fresh_ = true;
    }

    const MixRule* rule_;
    std::vector<std::unique_ptr<RuleCursor>> curs_;
    std::vector<double> r_;
    std::vector<BetPair> last_;
    BetPair combined_;
    bool fresh_ = false;
};

std::unique_ptr<RuleCursor> MixRule::cursor() const { return std::make_unique<MixCursor>(this); }

SGale mix_impl(const std::vector<SGale>& components, const std::vector<Rat>* weights) {
    if (components.empty()) throw DomainError("mix needs at least one component");
    if (weights && weights->size() != components.size())
        throw DomainError("weight count does not match component count");

    const SGale& first = components.front();
    for (const SGale& g : components) {
        bool same = (g.s_half() && first.s_half()) ? (*g.s_half() == *first.s_half())
                                                   : (g.s() == first.s());
        if (!same) throw DomainError("mix components must share the same exponent");
    }

    GaleKind kind = GaleKind::gale;
    for (const SGale& g : components)
        if (g.kind() == GaleKind::supergale) kind = GaleKind::supergale;

    std::size_t k = components.size();
    std::vector<double> winit_f(k);
    std::optional<std::vector<Rat>> winit_x;
    std::optional<Root2Rat> initial_exact;
    double init_f = 0;

    if (!weights) {
        // Default weights 2^-k / d_k(lambda) make the reduced initial masses
        // exactly 2^-k regardless of the component capitals.
        winit_x.emplace();
        Root2Rat init_x{Rat(0)};
        for (std::size_t j = 0; j < k; ++j) {
            if (components[j].log2_initial() == -kInf)
                throw DomainError("mix default weights need positive initial capital");
            if (components[j].initial_exact() && components[j].initial_exact()->sign() == 0)
                throw DomainError("mix default weights need positive initial capital");
            winit_f[j] = std::exp2(-static_cast<double>(j));
            winit_x->push_back(pow2_rat(-static_cast<long long>(j)));
            init_x += Root2Rat(winit_x->back());
            init_f += winit_f[j];
        }
        initial_exact = init_x;
    } else {
        winit_x.emplace();
        Root2Rat init_x{Rat(0)};
        bool all_exact = true;
        for (std::size_t j = 0; j < k; ++j) {
            const Rat& wj = (*weights)[j];
            if (wj < 0) throw DomainError("mix weights must be nonnegative");
            winit_f[j] = rat_to_double(wj) * std::exp2(components[j].log2_initial());
            if (components[j].initial_exact()) {
                Root2Rat scaled = *components[j].initial_exact() * Root2Rat(wj);
                init_x += scaled;
                if (scaled.is_rational() && winit_x)
                    winit_x->push_back(scaled.as_rational());
                else
                    winit_x.reset();
            } else {
                all_exact = false;
                winit_x.reset();
            }
        }
        if (all_exact) initial_exact = init_x;
        init_f = 0;
        for (double v : winit_f) init_f += v;
    }

    if (init_f <= 0) throw DomainError("mix needs positive total initial capital");

    std::optional<std::size_t> depth;
    std::vector<std::shared_ptr<const BetRule>> rules;
    for (const SGale& g : components) {
        rules.push_back(g.rule_ptr());
        if (auto dl = g.rule().depth_limit())
            depth = depth ? std::min(*depth, *dl) : *dl;
    }

    auto rule = std::make_shared<MixRule>(std::move(rules), std::move(winit_f),
                                          std::move(winit_x), depth);
    double log2_init = std::log2(init_f);
    if (first.s_half()) {
        Rat s_rat(first.s_half()->twice, 2);
        return SGale(s_rat, kind, std::move(rule), log2_init, std::move(initial_exact));
    }
    return SGale(first.s(), kind, std::move(rule), log2_init, std::move(initial_exact));
}

}  // namespace

SGale mix(const std::vector<SGale>& components) { return mix_impl(components, nullptr); }

SGale mix(const std::vector<SGale>& components, const std::vector<Rat>& weights) {
    return mix_impl(components, &weights);
}

SGale scale_exponent(const SGale& g, const Rat& t) {
    Rat s_rat;
    bool have_rat = false;
    if (g.s_half()) {
        s_rat = Rat(g.s_half()->twice, 2) - t;
        have_rat = true;
    }
    double s_new = g.s() - rat_to_double(t);
    if ((have_rat && s_rat < 0) || (!have_rat && s_new < 0))
        throw DomainError("scaled exponent would be negative");
    if (have_rat)
        return SGale(s_rat, g.kind(), g.rule_ptr(), g.log2_initial(), g.initial_exact());
    return SGale(s_new, g.kind(), g.rule_ptr(), g.log2_initial(), g.initial_exact());
}

// ---------------------------------------------------------------------------
// Named rules

namespace {

class MeasureRule final : public BetRule {
public:
    explicit MeasureRule(BiasSequence beta) : beta_(std::move(beta)) {}

    BetPair bets_at(const Bits& w) const override {
        double b = beta_.at_double(w.size());
        return {1.0 - b, b};
    }

    bool exact() const override { return true; }

    RatBetPair bets_at_exact(const Bits& w) const override {
        Rat b = beta_.at(w.size());
        return {Rat(1) - b, b};
    }

    nlohmann::json to_json() const override;

    const BiasSequence& beta() const { return beta_; }

private:
    BiasSequence beta_;
};

class ConstantRule final : public BetRule {
public:
    ConstantRule(Rat on0, Rat on1) : on0_(std::move(on0)), on1_(std::move(on1)) {
        if (on0_ < 0 || on0_ > 1 || on1_ < 0 || on1_ > 1 || on0_ + on1_ > 1)
            throw StructureError("constant bets must lie in [0,1] with sum at most 1");
    }

    BetPair bets_at(const Bits&) const override {
        return {rat_to_double(on0_), rat_to_double(on1_)};
    }
    bool exact() const override { return true; }
    RatBetPair bets_at_exact(const Bits&) const override { return {on0_, on1_}; }

    nlohmann::json to_json() const override {
        return {{"type", "constant"}, {"on0", rat_to_string(on0_)}, {"on1", rat_to_string(on1_)}};
    }

private:
    Rat on0_, on1_;
};

class TableRule final : public BetRule {
public:
    TableRule(std::size_t depth, std::vector<std::pair<std::string, RatBetPair>> entries)
        : depth_(depth) {
        for (auto& [node, bets] : entries) {
            bits_from_string(node);  // validates characters
            if (node.size() > depth)
                throw StructureError("table entry deeper than the declared depth");
            if (bets.on0 < 0 || bets.on0 > 1 || bets.on1 < 0 || bets.on1 > 1 ||
                bets.on0 + bets.on1 > 1)
                throw StructureError("table bets must lie in [0,1] with sum at most 1");
            table_[node] = bets;
        }
    }

    BetPair bets_at(const Bits& w) const override {
        RatBetPair bp = bets_at_exact(w);
        return {rat_to_double(bp.on0), rat_to_double(bp.on1)};
    }

    bool exact() const override { return true; }

    RatBetPair bets_at_exact(const Bits& w) const override {
        auto it = table_.find(bits_to_string(w));
        if (it == table_.end()) return {Rat(1, 2), Rat(1, 2)};
        return it->second;
    }

    std::optional<std::size_t> depth_limit() const override { return depth_; }

    nlohmann::json to_json() const override {
        nlohmann::json entries = nlohmann::json::object();
        for (const auto& [node, bets] : table_)
            entries[node] = {rat_to_string(bets.on0), rat_to_string(bets.on1)};
        return {{"type", "table"}, {"depth", depth_}, {"entries", entries}};
    }

private:
    std::size_t depth_;
    std::unordered_map<std::string, RatBetPair> table_;
};

class CoverRule final : public BetRule {
public:
    CoverRule(std::vector<std::string> sorted, std::size_t n) : strings_(std::move(sorted)), n_(n) {}

    BetPair bets_at(const Bits& w) const override {
        RatBetPair bp = bets_at_exact(w);
        return {rat_to_double(bp.on0), rat_to_double(bp.on1)};
    }

    bool exact() const override { return true; }

    RatBetPair bets_at_exact(const Bits& w) const override {
        if (w.size() >= n_) return {Rat(1, 2), Rat(1, 2)};
        std::string ws = bits_to_string(w);
        std::size_t total = count_with_prefix(ws);
        if (total == 0) return {Rat(1, 2), Rat(1, 2)};
        std::size_t c0 = count_with_prefix(ws + '0');
        return {Rat(c0, total), Rat(total - c0, total)};
    }

    nlohmann::json to_json() const override;

    std::size_t count_with_prefix(const std::string& p) const {
        std::string lo = p, hi = p;
        lo.append(n_ - p.size(), '0');
        hi.append(n_ - p.size(), '1');
        auto first = std::lower_bound(strings_.begin(), strings_.end(), lo);
        auto last = std::upper_bound(strings_.begin(), strings_.end(), hi);
        return static_cast<std::size_t>(last - first);
    }

    std::size_t member_length() const { return n_; }
    const std::vector<std::string>& members() const { return strings_; }
    Rat s_prime_for_json;  // remembered only for serialization

private:
    std::vector<std::string> strings_;
    std::size_t n_;
};

nlohmann::json MeasureRule::to_json() const {
    return {{"type", "measure"}, {"beta", bias_to_json(beta_)}};
}

nlohmann::json CoverRule::to_json() const {
    nlohmann::json strings = nlohmann::json::array();
    for (const std::string& s : strings_) strings.push_back(s);
    return {{"type", "cover"}, {"strings", strings}, {"s_prime", rat_to_string(s_prime_for_json)}};
}

}  // namespace

SGale gale_from_measure(const BiasSequence& beta, const Rat& s) {
    return SGale(s, GaleKind::gale, std::make_shared<MeasureRule>(beta), 0.0, Root2Rat(Rat(1)));
}

SGale cover_gale(const std::vector<Bits>& A, const Rat& s, const Rat& s_prime) {
    if (!(s > s_prime) || !(s_prime > 0))
        throw DomainError("cover gale needs s > s_prime > 0");
    if (A.empty()) throw DomainError("cover needs at least one string");
    std::size_t n = A.front().size();
    if (n == 0) throw DomainError("cover strings must be nonempty");
    std::vector<std::string> sorted;
    sorted.reserve(A.size());
    for (const Bits& u : A) {
        if (u.size() != n) throw StructureError("cover strings must share one length");
        sorted.push_back(bits_to_string(u));
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw StructureError("cover strings must be distinct");

    auto rule = std::make_shared<CoverRule>(std::move(sorted), n);
    rule->s_prime_for_json = s_prime;

    double log2_init = std::log2(static_cast<double>(A.size())) -
                       rat_to_double(s_prime) * static_cast<double>(n);
    std::optional<Root2Rat> init_exact;
    if (auto sp = as_half_exp(s_prime)) {
        long long k = -sp->twice * static_cast<long long>(n);
        init_exact = Root2Rat(Rat(A.size())).times_pow2(HalfExp{k});
    }
    return SGale(s, GaleKind::gale, std::move(rule), log2_init, std::move(init_exact));
}

std::shared_ptr<const BetRule> constant_rule(const Rat& on0, const Rat& on1) {
    return std::make_shared<ConstantRule>(on0, on1);
}

std::shared_ptr<const BetRule> constant_rule(const Rat& on0) {
    return constant_rule(on0, Rat(1) - on0);
}

std::shared_ptr<const BetRule> table_rule(
    std::size_t depth, std::vector<std::pair<std::string, RatBetPair>> entries) {
    return std::make_shared<TableRule>(depth, std::move(entries));
}

}  // namespace galedim
