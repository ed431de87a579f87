#include "galedim/bias.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "galedim/rng.hpp"
#include "galedim/tower.hpp"

namespace galedim {

namespace {

void check_open_unit(const Rat& b, const char* what) {
    if (b <= 0 || b >= 1) throw DomainError(std::string(what) + " must lie strictly in (0,1)");
}

}  // namespace

BiasSequence BiasSequence::constant(Rat beta) {
    check_open_unit(beta, "constant bias");
    BiasSequence s;
    s.kind_ = BiasKind::constant;
    s.lo_ = s.hi_ = beta;
    s.values_ = {std::move(beta)};
    s.label_ = "constant";
    return s;
}

BiasSequence BiasSequence::periodic(std::vector<Rat> values) {
    if (values.empty()) throw DomainError("periodic bias needs at least one value");
    for (const Rat& v : values) check_open_unit(v, "periodic bias value");
    BiasSequence s;
    s.kind_ = BiasKind::periodic;
    s.lo_ = *std::min_element(values.begin(), values.end());
    s.hi_ = *std::max_element(values.begin(), values.end());
    s.values_ = std::move(values);
    s.label_ = "periodic";
    return s;
}

BiasSequence BiasSequence::table(std::vector<Rat> values) {
    if (values.empty()) throw DomainError("bias table needs at least one value");
    for (const Rat& v : values) check_open_unit(v, "bias table value");
    BiasSequence s;
    s.kind_ = BiasKind::table;
    s.lo_ = *std::min_element(values.begin(), values.end());
    s.hi_ = *std::max_element(values.begin(), values.end());
    s.values_ = std::move(values);
    s.label_ = "table";
    return s;
}

BiasSequence BiasSequence::tower_alternating(Rat kappa_even, Rat kappa_odd) {
    check_open_unit(kappa_even, "kappa_even");
    check_open_unit(kappa_odd, "kappa_odd");
    BiasSequence s;
    s.kind_ = BiasKind::tower;
    s.lo_ = std::min(kappa_even, kappa_odd);
    s.hi_ = std::max(kappa_even, kappa_odd);
    s.values_ = {std::move(kappa_even), std::move(kappa_odd)};
    s.label_ = "tower";
    return s;
}

BiasSequence BiasSequence::custom(std::function<Rat(const BigInt&)> fn, Rat lo, Rat hi,
                                  std::string label) {
    if (lo <= 0 || hi >= 1 || lo > hi) throw DomainError("custom bias bounds must satisfy 0 < lo <= hi < 1");
    BiasSequence s;
    s.kind_ = BiasKind::custom;
    s.fn_ = std::move(fn);
    s.lo_ = std::move(lo);
    s.hi_ = std::move(hi);
    s.label_ = std::move(label);
    return s;
}

Rat BiasSequence::at(const BigInt& i) const {
    if (i < 0) throw DomainError("bias index must be nonnegative");
    switch (kind_) {
        case BiasKind::constant:
            return values_[0];
        case BiasKind::periodic: {
            BigInt m = i % BigInt(values_.size());
            return values_[m.convert_to<std::size_t>()];
        }
        case BiasKind::table: {
            if (i >= BigInt(values_.size()))
                throw DomainError("bias table index out of range");
            return values_[i.convert_to<std::size_t>()];
        }
        case BiasKind::tower: {
            int parity = log_star(i) % 2;
            return parity == 0 ? values_[0] : values_[1];
        }
        case BiasKind::custom:
            return fn_(i);
    }
    throw DomainError("unreachable bias kind");
}

double BiasSequence::at_double(std::size_t i) const { return rat_to_double(at(i)); }

double shannon_entropy(double beta) {
    if (beta < 0.0 || beta > 1.0) throw DomainError("entropy argument outside [0,1]");
    if (beta == 0.0 || beta == 1.0) return 0.0;
    return -beta * std::log2(beta) - (1.0 - beta) * std::log2(1.0 - beta);
}

double shannon_entropy(const Rat& beta) { return shannon_entropy(rat_to_double(beta)); }

EntropyWindow avg_entropy(const BiasSequence& beta, std::size_t n) {
    if (n == 0) throw DomainError("avg_entropy needs n >= 1");
    EntropyWindow out;
    out.window_lo = window_start(n);
    double sum = 0;
    out.window_min = std::numeric_limits<double>::infinity();
    out.window_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        sum += shannon_entropy(beta.at_double(i));
        std::size_t m = i + 1;
        if (m >= out.window_lo) {
            double avg = sum / static_cast<double>(m);
            out.window_min = std::min(out.window_min, avg);
            out.window_max = std::max(out.window_max, avg);
        }
    }
    out.h_n = sum / static_cast<double>(n);
    return out;
}

double log2_measure(const BiasSequence& beta, const Bits& w) {
    double acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        double b = beta.at_double(i);
        acc += std::log2(w[i] ? b : 1.0 - b);
    }
    return acc;
}

Rat measure_exact(const BiasSequence& beta, const Bits& w) {
    Rat acc(1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        Rat b = beta.at(i);
        acc *= w[i] ? b : Rat(1) - b;
    }
    return acc;
}

SelfInfoStats self_information(const BiasSequence& beta, const Bits& prefix) {
    if (prefix.empty()) throw DomainError("self_information needs a nonempty prefix");
    SelfInfoStats out;
    out.n = prefix.size();
    out.info = -log2_measure(beta, prefix);
    double hsum = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) hsum += shannon_entropy(beta.at_double(i));
    out.expected = hsum;
    out.deviation = out.info - out.expected;
    return out;
}

Bits sample_sequence(const BiasSequence& beta, std::size_t n, uint64_t seed) {
    BitSampler sampler(seed);
    Bits out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sampler.next_bit(beta.at_double(i)));
    return out;
}

ExactTail deviation_tail_exact(const BiasSequence& beta, std::size_t n, double eps) {
    if (n == 0 || n > kTailExactMaxN)
        throw ResourceError("deviation_tail_exact supports 1 <= n <= 4096");
    if (eps <= 0) throw DomainError("eps must be positive");

    constexpr double kGrid = 0x1.0p-20;
    constexpr std::size_t kMaxStates = std::size_t(1) << 22;

    std::unordered_map<int64_t, double> dist;
    dist.reserve(1024);
    dist[0] = 1.0;
    double expected = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double b = beta.at_double(i);
        expected += shannon_entropy(b);
        int64_t k0 = llround(-std::log2(1.0 - b) / kGrid);
        int64_t k1 = llround(-std::log2(b) / kGrid);
        std::unordered_map<int64_t, double> next;
        next.reserve(dist.size() * 2);
        for (const auto& [k, p] : dist) {
            next[k + k0] += p * (1.0 - b);
            next[k + k1] += p * b;
        }
        if (next.size() > kMaxStates)
            throw ResourceError("deviation_tail_exact state budget exceeded");
        dist = std::move(next);
    }

    double threshold = eps * static_cast<double>(n);
    ExactTail out;
    out.dp_states = dist.size();
    out.value_error_bound = static_cast<double>(n) * kGrid / 2.0;
    for (const auto& [k, p] : dist) {
        double value = static_cast<double>(k) * kGrid;
        if (std::abs(value - expected) >= threshold) out.probability += p;
    }
    return out;
}

McTail deviation_tail_mc(const BiasSequence& beta, std::size_t n, double eps, uint64_t trials,
                         uint64_t seed) {
    if (n == 0) throw DomainError("deviation_tail_mc needs n >= 1");
    if (trials == 0) throw DomainError("deviation_tail_mc needs trials >= 1");
    if (eps <= 0) throw DomainError("eps must be positive");

    std::vector<double> xi0(n), xi1(n), betas(n);
    double expected = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double b = beta.at_double(i);
        betas[i] = b;
        xi0[i] = -std::log2(1.0 - b);
        xi1[i] = -std::log2(b);
        expected += shannon_entropy(b);
    }
    double threshold = eps * static_cast<double>(n);

    uint64_t hits = 0;
    for (uint64_t t = 0; t < trials; ++t) {
        BitSampler sampler(derive_seed(seed, t));
        double info = 0;
        for (std::size_t i = 0; i < n; ++i)
            info += sampler.next_bit(betas[i]) ? xi1[i] : xi0[i];
        if (std::abs(info - expected) >= threshold) ++hits;
    }

    McTail out;
    out.trials = trials;
    out.probability = static_cast<double>(hits) / static_cast<double>(trials);
    out.std_error =
        std::sqrt(out.probability * (1.0 - out.probability) / static_cast<double>(trials));
    return out;
}

namespace {

// Worst-case feasibility gap of the moment inequality at theta over the bias
// grid and both deviation directions.
double chernoff_margin(double theta, double delta, double eps) {
    constexpr double kStep = 1e-3;
    double worst = std::numeric_limits<double>::infinity();
    double rhs_base = 1.0 - theta * eps / 2.0;
    int steps = static_cast<int>(std::floor((1.0 - 2.0 * delta) / kStep));
    for (int i = 0; i <= steps + 1; ++i) {
        double b = std::min(delta + kStep * i, 1.0 - delta);
        double x0 = -std::log2(1.0 - b);
        double x1 = -std::log2(b);
        double h = shannon_entropy(b);
        // eta = xi - h - eps (overshoot) and eta = h - xi - eps (undershoot)
        double up = (1.0 - b) * std::exp(theta * (x0 - h - eps)) +
                    b * std::exp(theta * (x1 - h - eps));
        double dn = (1.0 - b) * std::exp(theta * (h - x0 - eps)) +
                    b * std::exp(theta * (h - x1 - eps));
        worst = std::min({worst, rhs_base - up, rhs_base - dn});
        if (delta + kStep * i >= 1.0 - delta) break;
    }
    return worst;
}

}  // namespace

ChernoffBound chernoff_alpha(double delta, double eps) {
    if (!(delta > 0 && delta <= 0.5)) throw DomainError("delta must lie in (0, 1/2]");
    if (!(eps > 0)) throw DomainError("eps must be positive");

    auto margin = [&](double th) { return chernoff_margin(th, delta, eps); };

    // Bracket the concave margin: expand until it turns negative (or cap out).
    double hi = 1.0 / 64.0;
    while (hi < 64.0 && margin(hi) > 0) hi *= 2.0;

    // Golden-section maximization on [0, hi].
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = margin(c), fd = margin(d);
    for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = margin(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = margin(d);
        }
    }
    double theta = (fc > fd) ? c : d;
    double best = std::max(fc, fd);
    if (!(theta > 0) || !(best > 0))
        throw NumericError("no feasible exponent for the requested (delta, eps)");

    ChernoffBound out;
    out.theta = theta;
    out.alpha = 1.0 - theta * eps / 2.0;
    out.margin = best;
    return out;
}

RationalizedBias rationalize(std::function<Rat(std::size_t, long long)> approx, const Rat& delta,
                             const Rat& declared_upper) {
    if (delta <= 0 || delta > Rat(1, 2)) throw DomainError("delta must lie in (0, 1/2]");
    if (declared_upper >= 1) throw DomainError("declared upper bound must be < 1");
    long long m = 2 + ceil_log2(Rat(1) / delta);

    auto fn = [approx, m](const BigInt& idx) -> Rat {
        std::size_t i = idx.convert_to<std::size_t>();
        long long r = m + static_cast<long long>(i);
        Rat b = approx(i, r) - pow2_rat(-r);
        return b;
    };

    return RationalizedBias{
        BiasSequence::custom(std::move(fn), delta / 2, declared_upper, "rationalized"), m};
}

Rat rationalize_square_bound(long long m, std::size_t k) {
    Rat sum(0);
    for (std::size_t i = 0; i < k; ++i)
        sum += pow2_rat(-2 * (m + static_cast<long long>(i)) + 2);
    return sum;
}

MartingaleCheck validate_beta_martingale(const BetaMartingale& d, const BiasSequence& beta,
                                         std::size_t depth, double rel_tol) {
    MartingaleCheck out;
    out.exact_mode = static_cast<bool>(d.value_exact);
    out.pass = true;

    Bits w;
    // Iterative DFS over all nodes with |w| < depth.
    std::function<void()> visit = [&]() {
        if (w.size() >= depth) return;
        std::size_t i = w.size();
        if (out.exact_mode) {
            Rat b = beta.at(i);
            Rat here = d.value_exact(w);
            w.push_back(0);
            Rat v0 = d.value_exact(w);
            visit();
            w.back() = 1;
            Rat v1 = d.value_exact(w);
            visit();
            w.pop_back();
            Rat mean = (Rat(1) - b) * v0 + b * v1;
            Rat diff = here - mean;
            if (diff != 0) {
                out.pass = false;
                double ad = std::abs(rat_to_double(diff));
                if (ad >= out.worst_abs) {
                    out.worst_abs = ad;
                    out.worst_rel = here == 0 ? ad : std::abs(rat_to_double(diff / here));
                    out.worst_node = bits_to_string(w);
                }
            }
        } else {
            double b = beta.at_double(i);
            double here = d.value(w);
            w.push_back(0);
            double v0 = d.value(w);
            visit();
            w.back() = 1;
            double v1 = d.value(w);
            visit();
            w.pop_back();
            double mean = (1.0 - b) * v0 + b * v1;
            double ad = std::abs(here - mean);
            double rel = ad / std::max(std::abs(here), 1e-300);
            if (ad > 0 && rel > out.worst_rel) {
                out.worst_rel = rel;
                out.worst_abs = ad;
                out.worst_node = bits_to_string(w);
            }
            if (rel > rel_tol) out.pass = false;
        }
        ++out.nodes_checked;
    };
    visit();
    return out;
}

}  // namespace galedim
