#include "galedim/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "galedim/errors.hpp"
#include "galedim/serialize.hpp"

namespace galedim {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Rat Predictor::prob_exact(const Bits&, uint8_t) const {
    throw DomainError("predictor does not provide exact probabilities");
}

namespace {

// Fallback cursor; costs O(|w|) per step for predictors that rescan their
// context, so the built-ins override cursor() with O(1) state.
class PathPredictorCursor final : public PredictorCursor {
public:
    explicit PathPredictorCursor(const Predictor* pi) : pi_(pi) {}
    double prob(uint8_t b) override { return pi_->prob(path_, b); }
    void advance(uint8_t b) override { path_.push_back(b); }

private:
    const Predictor* pi_;
    Bits path_;
};

}  // namespace

std::unique_ptr<PredictorCursor> Predictor::cursor() const {
    return std::make_unique<PathPredictorCursor>(this);
}

namespace {

class ConstantPredictor final : public Predictor {
public:
    explicit ConstantPredictor(Rat p1) : p1_(std::move(p1)) {
        if (p1_ < 0 || p1_ > 1) throw DomainError("probability outside [0,1]");
    }
    double prob(const Bits&, uint8_t b) const override {
        return b ? rat_to_double(p1_) : rat_to_double(Rat(1) - p1_);
    }
    bool exact() const override { return true; }
    Rat prob_exact(const Bits&, uint8_t b) const override { return b ? p1_ : Rat(1) - p1_; }
    std::unique_ptr<PredictorCursor> cursor() const override {
        class Cur final : public PredictorCursor {
        public:
            Cur(double p0, double p1) : p0_(p0), p1_(p1) {}
            double prob(uint8_t b) override { return b ? p1_ : p0_; }
            void advance(uint8_t) override {}

        private:
            double p0_, p1_;
        };
        return std::make_unique<Cur>(rat_to_double(Rat(1) - p1_), rat_to_double(p1_));
    }
    nlohmann::json to_json() const override {
        return {{"type", "constant"}, {"p1", rat_to_string(p1_)}};
    }

private:
    Rat p1_;
};

class MeasurePredictor final : public Predictor {
public:
    explicit MeasurePredictor(BiasSequence beta) : beta_(std::move(beta)) {}
    double prob(const Bits& w, uint8_t b) const override {
        double p = beta_.at_double(w.size());
        return b ? p : 1.0 - p;
    }
    bool exact() const override { return true; }
    Rat prob_exact(const Bits& w, uint8_t b) const override {
        Rat p = beta_.at(w.size());
        return b ? p : Rat(1) - p;
    }
    std::unique_ptr<PredictorCursor> cursor() const override {
        class Cur final : public PredictorCursor {
        public:
            explicit Cur(const BiasSequence* beta) : beta_(beta) {}
            double prob(uint8_t b) override {
                double p = beta_->at_double(pos_);
                return b ? p : 1.0 - p;
            }
            void advance(uint8_t) override { ++pos_; }

        private:
            const BiasSequence* beta_;
            std::size_t pos_ = 0;
        };
        return std::make_unique<Cur>(&beta_);
    }
    nlohmann::json to_json() const override;
    const BiasSequence& beta() const { return beta_; }

private:
    BiasSequence beta_;
};

class TablePredictor final : public Predictor {
public:
    TablePredictor(std::size_t depth, std::vector<std::pair<std::string, Rat>> entries)
        : depth_(depth) {
        for (auto& [node, p1] : entries) {
            bits_from_string(node);
            if (node.size() > depth_) throw StructureError("table entry deeper than declared");
            if (p1 < 0 || p1 > 1) throw DomainError("probability outside [0,1]");
            table_[node] = p1;
        }
    }
    double prob(const Bits& w, uint8_t b) const override {
        return rat_to_double(prob_exact(w, b));
    }
    bool exact() const override { return true; }
    Rat prob_exact(const Bits& w, uint8_t b) const override {
        auto it = table_.find(bits_to_string(w));
        Rat p1 = it == table_.end() ? Rat(1, 2) : it->second;
        return b ? p1 : Rat(1) - p1;
    }
    std::unique_ptr<PredictorCursor> cursor() const override {
        // Entries never sit deeper than depth_, so past it every lookup
        // misses and the node string can stop growing.
        class Cur final : public PredictorCursor {
        public:
            explicit Cur(const TablePredictor* pi) : pi_(pi) {}
            double prob(uint8_t b) override {
                Rat p1(1, 2);
                if (len_ <= pi_->depth_) {
                    auto it = pi_->table_.find(node_);
                    if (it != pi_->table_.end()) p1 = it->second;
                }
                return rat_to_double(b ? p1 : Rat(1) - p1);
            }
            void advance(uint8_t b) override {
                ++len_;
                if (len_ <= pi_->depth_) node_.push_back(b ? '1' : '0');
            }

        private:
            const TablePredictor* pi_;
            std::string node_;
            std::size_t len_ = 0;
        };
        return std::make_unique<Cur>(this);
    }
    nlohmann::json to_json() const override {
        nlohmann::json entries = nlohmann::json::object();
        for (const auto& [node, p1] : table_) entries[node] = rat_to_string(p1);
        return {{"type", "table"}, {"depth", depth_}, {"entries", entries}};
    }

private:
    std::size_t depth_;
    std::unordered_map<std::string, Rat> table_;
};

class LaplacePredictor final : public Predictor {
public:
    double prob(const Bits& w, uint8_t b) const override {
        std::size_t ones = static_cast<std::size_t>(std::count(w.begin(), w.end(), uint8_t{1}));
        double p1 = (static_cast<double>(ones) + 0.5) / (static_cast<double>(w.size()) + 1.0);
        return b ? p1 : 1.0 - p1;
    }
    bool exact() const override { return true; }
    Rat prob_exact(const Bits& w, uint8_t b) const override {
        std::size_t ones = static_cast<std::size_t>(std::count(w.begin(), w.end(), uint8_t{1}));
        Rat p1(2 * ones + 1, 2 * (w.size() + 1));
        return b ? p1 : Rat(1) - p1;
    }
    std::unique_ptr<PredictorCursor> cursor() const override {
        class Cur final : public PredictorCursor {
        public:
            double prob(uint8_t b) override {
                double p1 =
                    (static_cast<double>(ones_) + 0.5) / (static_cast<double>(len_) + 1.0);
                return b ? p1 : 1.0 - p1;
            }
            void advance(uint8_t b) override {
                ones_ += b ? 1 : 0;
                ++len_;
            }

        private:
            std::size_t ones_ = 0, len_ = 0;
        };
        return std::make_unique<Cur>();
    }
    nlohmann::json to_json() const override { return {{"type", "laplace"}}; }
};

class MixturePredictor final : public Predictor {
public:
    explicit MixturePredictor(std::vector<PredictorPtr> components)
        : components_(std::move(components)) {
        if (components_.empty()) throw DomainError("mixture needs at least one component");
        for (const auto& c : components_)
            if (!c) throw DomainError("null mixture component");
    }

    double prob(const Bits& w, uint8_t b) const override {
        if (exact()) return rat_to_double(prob_exact(w, b));
        Bits w0 = w, w1 = w;
        w0.push_back(0);
        w1.push_back(1);
        double m0 = mu_f(w.size() + 1, w0), m1 = mu_f(w.size() + 1, w1);
        return (b ? m1 : m0) / (m0 + m1);
    }

    bool exact() const override {
        for (const auto& c : components_)
            if (!c->exact()) return false;
        return true;
    }

    Rat prob_exact(const Bits& w, uint8_t b) const override {
        Bits w0 = w, w1 = w;
        w0.push_back(0);
        w1.push_back(1);
        Rat m0 = mu_x(w.size() + 1, w0), m1 = mu_x(w.size() + 1, w1);
        return (b ? m1 : m0) / (m0 + m1);
    }

    nlohmann::json to_json() const override {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : components_) comps.push_back(c->to_json());
        return {{"type", "mixture"}, {"components", comps}};
    }

private:
    // mu_k(x) = 2^-(2k+1) + sum_{j < min(k,M)} 2^-(2j+3) mu[pi_j](x).
    Rat mu_x(std::size_t k, const Bits& x) const {
        Rat total = pow2_rat(-2 * static_cast<long long>(k) - 1);
        std::size_t m = std::min(k, components_.size());
        for (std::size_t j = 0; j < m; ++j)
            total += pow2_rat(-2 * static_cast<long long>(j) - 3) *
                     predictor_measure_exact(*components_[j], x);
        return total;
    }

    double mu_f(std::size_t k, const Bits& x) const {
        double total = std::exp2(-2.0 * static_cast<double>(k) - 1.0);
        std::size_t m = std::min(k, components_.size());
        for (std::size_t j = 0; j < m; ++j) {
            double prod = 1;
            Bits pref;
            pref.reserve(x.size());
            for (uint8_t bit : x) {
                prod *= components_[j]->prob(pref, bit);
                pref.push_back(bit);
            }
            total += std::exp2(-2.0 * static_cast<double>(j) - 3.0) * prod;
        }
        return total;
    }

    std::vector<PredictorPtr> components_;
};

nlohmann::json MeasurePredictor::to_json() const {
    return {{"type", "measure"}, {"beta", bias_to_json(beta_)}};
}

}  // namespace

PredictorPtr constant_predictor(const Rat& p1) {
    return std::make_shared<ConstantPredictor>(p1);
}

PredictorPtr measure_predictor(const BiasSequence& beta) {
    return std::make_shared<MeasurePredictor>(beta);
}

PredictorPtr table_predictor(std::size_t depth,
                             std::vector<std::pair<std::string, Rat>> entries) {
    return std::make_shared<TablePredictor>(depth, std::move(entries));
}

PredictorPtr laplace_predictor() { return std::make_shared<LaplacePredictor>(); }

PredictorPtr mixture_predictor(std::vector<PredictorPtr> components) {
    return std::make_shared<MixturePredictor>(std::move(components));
}

Rat predictor_measure_exact(const Predictor& pi, const Bits& w) {
    if (!pi.exact()) throw DomainError("predictor does not provide exact probabilities");
    Rat prod(1);
    Bits pref;
    pref.reserve(w.size());
    for (uint8_t b : w) {
        prod *= pi.prob_exact(pref, b);
        pref.push_back(b);
    }
    return prod;
}

double log_loss(const Predictor& pi, const Bits& w) {
    double loss = 0;
    auto cur = pi.cursor();
    for (uint8_t b : w) {
        double p = cur->prob(b);
        if (!(p >= 0.0 && p <= 1.0 + 1e-12)) throw DomainError("predictor output outside [0,1]");
        loss += p <= 0.0 ? kInf : -std::log2(std::min(p, 1.0));
        cur->advance(b);
    }
    return loss;
}

LossTrace log_loss_trace(const Predictor& pi, const Bits& w, std::size_t window_lo_override) {
    std::size_t n = w.size();
    if (n == 0) throw DomainError("loss trace needs a nonempty string");
    LossTrace t;
    t.cumulative.resize(n + 1);
    t.cumulative[0] = 0;
    std::vector<double> running_pred(n + 1, 0.0);
    auto cur = pi.cursor();
    for (std::size_t i = 0; i < n; ++i) {
        double p = cur->prob(w[i]);
        if (!(p >= 0.0 && p <= 1.0 + 1e-12)) throw DomainError("predictor output outside [0,1]");
        t.cumulative[i + 1] = t.cumulative[i] + (p <= 0.0 ? kInf : -std::log2(std::min(p, 1.0)));
        t.success_total += p;
        running_pred[i + 1] = t.success_total;
        cur->advance(w[i]);
    }
    t.success_rate = t.success_total / static_cast<double>(n);

    t.window_lo = window_lo_override ? window_lo_override : std::max<std::size_t>(1, window_start(n));
    if (t.window_lo > n) throw DomainError("window start beyond the trace");
    t.window_hi = n;
    t.rate_lower = t.pred_lower = kInf;
    t.rate_upper = t.pred_upper = -kInf;
    for (std::size_t m = t.window_lo; m <= n; ++m) {
        double rate = t.cumulative[m] / static_cast<double>(m);
        double pred = running_pred[m] / static_cast<double>(m);
        t.rate_lower = std::min(t.rate_lower, rate);
        t.rate_upper = std::max(t.rate_upper, rate);
        t.pred_lower = std::min(t.pred_lower, pred);
        t.pred_upper = std::max(t.pred_upper, pred);
    }
    return t;
}

double success_rate(const Predictor& pi, const Bits& w) {
    if (w.empty()) throw DomainError("success rate of the empty string is undefined");
    double total = 0;
    auto cur = pi.cursor();
    for (uint8_t b : w) {
        total += cur->prob(b);
        cur->advance(b);
    }
    return total / static_cast<double>(w.size());
}

namespace {

class PredictorRule final : public BetRule {
public:
    explicit PredictorRule(PredictorPtr pi) : pi_(std::move(pi)) {}
    BetPair bets_at(const Bits& w) const override {
        return {pi_->prob(w, 0), pi_->prob(w, 1)};
    }
    bool exact() const override { return pi_->exact(); }
    RatBetPair bets_at_exact(const Bits& w) const override {
        return {pi_->prob_exact(w, 0), pi_->prob_exact(w, 1)};
    }
    std::unique_ptr<RuleCursor> cursor() const override {
        class Cur final : public RuleCursor {
        public:
            explicit Cur(std::unique_ptr<PredictorCursor> pc) : pc_(std::move(pc)) {}
            BetPair bets() override { return {pc_->prob(0), pc_->prob(1)}; }
            void advance(uint8_t b) override { pc_->advance(b); }

        private:
            std::unique_ptr<PredictorCursor> pc_;
        };
        return std::make_unique<Cur>(pi_->cursor());
    }
    nlohmann::json to_json() const override {
        return {{"type", "predictor"}, {"predictor", pi_->to_json()}};
    }

private:
    PredictorPtr pi_;
};

class MartingalePredictor final : public Predictor {
public:
    explicit MartingalePredictor(SGale d) : d_(std::move(d)) {}

    double prob(const Bits& w, uint8_t b) const override {
        if (evaluate(d_, w).log2_capital.back() == -kInf)
            throw DomainError("conditional undefined at a zero-capital node");
        BetPair bp = d_.rule().bets_at(w);
        return b ? bp.on1 : bp.on0;
    }

    bool exact() const override { return d_.exact_capable(); }

    Rat prob_exact(const Bits& w, uint8_t b) const override {
        if (evaluate_exact(d_, w).back().sign() == 0)
            throw DomainError("conditional undefined at a zero-capital node");
        RatBetPair bp = d_.rule().bets_at_exact(w);
        return b ? bp.on1 : bp.on0;
    }

    nlohmann::json to_json() const override {
        return {{"type", "from-martingale"}, {"gale", d_.to_json()}};
    }

private:
    SGale d_;
};

}  // namespace

SGale to_martingale(const PredictorPtr& pi) {
    if (!pi) throw DomainError("null predictor");
    auto rule = std::make_shared<PredictorRule>(pi);
    return SGale(Rat(1), GaleKind::gale, std::move(rule), 0.0, Root2Rat(Rat(1)));
}

PredictorPtr from_martingale(const SGale& d) {
    bool unit_s = d.s_half() ? d.s_half()->twice == 2 : d.s() == 1.0;
    if (!unit_s || d.kind() != GaleKind::gale)
        throw DomainError("from_martingale needs a martingale (s = 1 gale)");
    return std::make_shared<MartingalePredictor>(d);
}

BoundCheck bound_check(double p, double d, double slack) {
    if (!(p >= 0.5 && p <= 1.0)) throw DomainError("predictability must lie in [1/2, 1]");
    if (!(d >= 0.0 && d <= 1.0)) throw DomainError("dimension value must lie in [0, 1]");
    BoundCheck out;
    out.p = p;
    out.d = d;
    out.slack = slack;
    out.lower = 2.0 * (1.0 - p);
    out.upper = shannon_entropy(p);
    out.holds_lower = out.lower <= d + slack;
    out.holds_upper = d <= out.upper + slack;
    out.pass = out.holds_lower && out.holds_upper;
    return out;
}

}  // namespace galedim
