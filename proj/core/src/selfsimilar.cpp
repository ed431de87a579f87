#include "galedim/selfsimilar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "galedim/errors.hpp"
#include "galedim/rng.hpp"

namespace galedim {

void validate_system(const SelfSimilarSystem& sys) {
    if (sys.strings.empty()) throw DomainError("system needs at least one string");
    for (const Bits& u : sys.strings)
        if (u.empty()) throw StructureError("system strings must be nonempty");
    if (!is_prefix_set(sys.strings))
        throw StructureError("system strings must form a prefix set");
}

double kraft_value(const SelfSimilarSystem& sys, double s) {
    double sum = 0;
    for (const Bits& u : sys.strings) sum += std::exp2(-s * static_cast<double>(u.size()));
    return sum;
}

double selfsimilar_dimension(const SelfSimilarSystem& sys) {
    validate_system(sys);
    if (sys.strings.size() == 1) return 0.0;
    std::size_t max_len = 0;
    for (const Bits& u : sys.strings) max_len = std::max(max_len, u.size());
    double lo = 0.0;
    double hi = std::log2(static_cast<double>(sys.strings.size())) + static_cast<double>(max_len);
    // kraft_value is strictly decreasing; kraft(lo) = |A| > 1 > kraft(hi).
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        (kraft_value(sys, mid) >= 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

// Trie over the prefixes of the members. T(node) = [node is a member]
//   + 2^-s (T(child0) + T(child1)), the expected discounted count of member
// completions of the residual.
struct ResidualTrie {
    struct Node {
        int child[2] = {-1, -1};
        bool member = false;
        double t = 0;
    };
    std::vector<Node> nodes;

    explicit ResidualTrie(const SelfSimilarSystem& sys) {
        nodes.emplace_back();
        for (const Bits& u : sys.strings) {
            int cur = 0;
            for (uint8_t b : u) {
                if (nodes[cur].child[b] < 0) {
                    nodes.emplace_back();
                    nodes[cur].child[b] = static_cast<int>(nodes.size()) - 1;
                }
                cur = nodes[cur].child[b];
            }
            nodes[cur].member = true;
        }
    }

    void fill_t(double s) { fill_t_rec(0, s); }

    double fill_t_rec(int node, double s) {
        double sum = 0;
        for (int b = 0; b < 2; ++b)
            if (nodes[node].child[b] >= 0) sum += fill_t_rec(nodes[node].child[b], s);
        nodes[node].t = (nodes[node].member ? 1.0 : 0.0) + std::exp2(-s) * sum;
        return nodes[node].t;
    }
};

class SelfSimilarRule final : public BetRule {
public:
    SelfSimilarRule(const SelfSimilarSystem& sys, double s) : trie_(sys), s_(s) {
        trie_.fill_t(s);
    }

    BetPair bets_at(const Bits& w) const override {
        int node = walk(w);
        if (node < 0 || trie_.nodes[node].t <= 0) return {0.5, 0.5};
        double here = trie_.nodes[node].t;
        double scale = std::exp2(-s_) / here;
        return {branch_t(node, 0) * scale, branch_t(node, 1) * scale};
    }

    nlohmann::json to_json() const override { return {{"type", "selfsimilar"}}; }

    std::unique_ptr<RuleCursor> cursor() const override;

    // Residual node after w, -1 when w is not a prefix of any member chain.
    int walk(const Bits& w) const {
        int node = 0;
        for (uint8_t b : w) {
            if (node < 0) return -1;
            node = next(node, b);
        }
        return node;
    }

    // One residual step: completing a member resets to the root.
    int next(int node, uint8_t b) const {
        int c = trie_.nodes[node].child[b];
        if (c < 0) return -1;
        return trie_.nodes[c].member ? 0 : c;
    }

    // T value seen by the capital after stepping to branch b (reset applied).
    double branch_t(int node, uint8_t b) const {
        int c = trie_.nodes[node].child[b];
        if (c < 0) return 0;
        return trie_.nodes[c].member ? trie_.nodes[0].t : trie_.nodes[c].t;
    }

private:
    friend class SelfSimilarCursor;
    ResidualTrie trie_;
    double s_;
};

class SelfSimilarCursor final : public RuleCursor {
public:
    explicit SelfSimilarCursor(const SelfSimilarRule* rule) : rule_(rule), node_(0) {}
    BetPair bets() override {
        if (node_ < 0 || rule_->trie_.nodes[node_].t <= 0) return {0.5, 0.5};
        double scale = std::exp2(-rule_->s_) / rule_->trie_.nodes[node_].t;
        return {rule_->branch_t(node_, 0) * scale, rule_->branch_t(node_, 1) * scale};
    }
    void advance(uint8_t b) override {
        if (node_ >= 0) node_ = rule_->next(node_, b);
    }

private:
    const SelfSimilarRule* rule_;
    int node_;
};

std::unique_ptr<RuleCursor> SelfSimilarRule::cursor() const {
    return std::make_unique<SelfSimilarCursor>(this);
}

}  // namespace

SGale selfsimilar_supergale(const SelfSimilarSystem& sys, double s, double eps) {
    validate_system(sys);
    if (!(eps > 0)) throw DomainError("eps must be positive");
    double kraft = kraft_value(sys, s);
    if (kraft > 1.0 + 1e-12) throw DomainError("Kraft sum exceeds 1 at the requested s");
    auto rule = std::make_shared<SelfSimilarRule>(sys, s);
    return SGale(s + eps, GaleKind::supergale, std::move(rule), std::log2(kraft), std::nullopt);
}

BigInt box_count(const SelfSimilarSystem& sys, std::size_t n) {
    validate_system(sys);
    ResidualTrie trie(sys);
    std::vector<BigInt> cur(trie.nodes.size(), 0), nxt(trie.nodes.size(), 0);
    cur[0] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        std::fill(nxt.begin(), nxt.end(), BigInt(0));
        for (std::size_t node = 0; node < trie.nodes.size(); ++node) {
            if (cur[node] == 0) continue;
            for (int b = 0; b < 2; ++b) {
                int c = trie.nodes[node].child[b];
                if (c < 0) continue;
                nxt[trie.nodes[c].member ? 0 : c] += cur[node];
            }
        }
        std::swap(cur, nxt);
    }
    BigInt total = 0;
    for (const BigInt& v : cur) total += v;
    return total;
}

double log2_bigint(const BigInt& x) {
    if (x <= 0) return -std::numeric_limits<double>::infinity();
    if (x == 1) return 0.0;
    unsigned top = boost::multiprecision::msb(x);
    if (top <= 52) return std::log2(x.convert_to<double>());
    BigInt shifted = x >> (top - 52);
    return std::log2(shifted.convert_to<double>()) + static_cast<double>(top - 52);
}

double entropy_rate(const std::function<BigInt(std::size_t)>& counts, std::size_t window_lo,
                    std::size_t window_hi) {
    if (window_lo < 1 || window_lo > window_hi) throw DomainError("bad entropy window");
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t n = window_lo; n <= window_hi; ++n) {
        BigInt c = counts(n);
        if (c <= 0) continue;
        best = std::max(best, log2_bigint(c) / static_cast<double>(n));
    }
    return best;
}

Bits selfsimilar_cycle_prefix(const SelfSimilarSystem& sys, std::size_t n) {
    validate_system(sys);
    std::vector<Bits> sorted = sys.strings;
    std::sort(sorted.begin(), sorted.end());
    Bits out;
    out.reserve(n);
    std::size_t k = 0;
    while (out.size() < n) {
        const Bits& u = sorted[k % sorted.size()];
        for (uint8_t b : u) {
            if (out.size() >= n) break;
            out.push_back(b);
        }
        ++k;
    }
    return out;
}

Bits selfsimilar_sample_prefix(const SelfSimilarSystem& sys, std::size_t n, uint64_t seed) {
    validate_system(sys);
    std::vector<Bits> sorted = sys.strings;
    std::sort(sorted.begin(), sorted.end());
    BitSampler rng(seed);
    Bits out;
    out.reserve(n);
    while (out.size() < n) {
        const Bits& u = sorted[rng.next_index(sorted.size())];
        for (uint8_t b : u) {
            if (out.size() >= n) break;
            out.push_back(b);
        }
    }
    return out;
}

}  // namespace galedim
