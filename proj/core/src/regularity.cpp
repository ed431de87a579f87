#include "galedim/regularity.hpp"

#include <algorithm>
#include <limits>

#include "galedim/errors.hpp"
#include "galedim/rng.hpp"
#include "galedim/tower.hpp"

namespace galedim {

void validate_spec(const RegularitySpec& spec) {
    if (!(spec.alpha > 0)) throw DomainError("alpha must be positive");
    if (!(spec.alpha <= spec.beta)) throw DomainError("alpha must not exceed beta");
    if (!(spec.beta <= 1)) throw DomainError("beta must be at most 1");
}

unsigned schedule_driver(ScheduleKind kind, uint64_t n) {
    if (n == 0) throw DomainError("blocks are numbered from 1");
    if (kind == ScheduleKind::logstar) return log_star(n);
    if (n < 2) return 0;
    return floor_log2(floor_log2(n));
}

Rat block_gamma(const RegularitySpec& spec, uint64_t n) {
    bool odd = schedule_driver(spec.schedule, n) % 2 == 1;
    const Rat& p = odd ? spec.alpha : spec.beta;
    return (Rat(1) - p) / p;
}

namespace {

BigInt ceil_mul(uint64_t len, const Rat& gamma) {
    Rat exact = Rat(len) * gamma;
    BigInt num = boost::multiprecision::numerator(exact);
    BigInt den = boost::multiprecision::denominator(exact);
    BigInt q = num / den;
    if (q * den != num) q += 1;
    return q;
}

BlockRecord make_record(const RegularitySpec& spec, uint64_t n, const BigInt& prev_end) {
    BlockRecord rec;
    rec.n = n;
    rec.r_len = 2 * n - 1;
    rec.driver = schedule_driver(spec.schedule, n);
    rec.gamma = block_gamma(spec, n);
    rec.k = ceil_mul(rec.r_len, rec.gamma);
    rec.random_end = BigInt(n) * n;
    rec.end = prev_end + rec.r_len + rec.k;
    return rec;
}

}  // namespace

std::vector<BlockRecord> build_ledger(const RegularitySpec& spec, uint64_t max_blocks) {
    validate_spec(spec);
    std::vector<BlockRecord> ledger;
    ledger.reserve(max_blocks);
    BigInt end(0);
    for (uint64_t n = 1; n <= max_blocks; ++n) {
        ledger.push_back(make_record(spec, n, end));
        end = ledger.back().end;
    }
    return ledger;
}

SandwichReport sandwich_check(const RegularitySpec& spec,
                              const std::vector<BlockRecord>& ledger) {
    validate_spec(spec);
    SandwichReport report;
    report.worst_lower_margin = std::numeric_limits<double>::infinity();
    report.worst_upper_margin = std::numeric_limits<double>::infinity();
    for (const BlockRecord& rec : ledger) {
        Rat len(rec.end);
        Rat lower = Rat((BigInt(rec.n) - 1) * (BigInt(rec.n) - 1)) / spec.beta;
        Rat upper = Rat((BigInt(rec.n) + 1) * (BigInt(rec.n) + 1)) / spec.alpha;
        if (len < lower || len > upper) {
            report.pass = false;
            ++report.violations;
        }
        report.worst_lower_margin =
            std::min(report.worst_lower_margin, rat_to_double(len - lower));
        report.worst_upper_margin =
            std::min(report.worst_upper_margin, rat_to_double(upper - len));
    }
    return report;
}

RegularityPrefix build_prefix(const RegularitySpec& spec, std::size_t target_length) {
    validate_spec(spec);
    if (target_length < 1) throw DomainError("target length must be positive");
    RegularityPrefix out;
    out.bits.reserve(target_length);
    BitSampler rng(spec.seed);
    BigInt end(0);
    for (uint64_t n = 1; out.bits.size() < target_length; ++n) {
        BlockRecord rec = make_record(spec, n, end);
        end = rec.end;
        for (uint64_t i = 0; i < rec.r_len && out.bits.size() < target_length; ++i)
            out.bits.push_back(rng.next_bit(0.5));
        BigInt pad = rec.k;
        while (pad > 0 && out.bits.size() < target_length) {
            out.bits.push_back(0);
            pad -= 1;
        }
        if (BigInt(out.bits.size()) == rec.end) out.ledger.push_back(rec);
    }
    return out;
}

}  // namespace galedim
