#include "doctest.h"
#include "galedim/bias.hpp"
#include "galedim/regularity.hpp"
#include "galedim/tower.hpp"

using namespace galedim;

namespace {

RegularitySpec spec_of(const Rat& alpha, const Rat& beta,
                       ScheduleKind k = ScheduleKind::logstar) {
    RegularitySpec s;
    s.alpha = alpha;
    s.beta = beta;
    s.seed = 17;
    s.schedule = k;
    return s;
}

}  // namespace

TEST_CASE("spec validation") {
    validate_spec(spec_of(Rat(1, 2), Rat(1)));
    CHECK_THROWS_AS(validate_spec(spec_of(Rat(0), Rat(1))), DomainError);
    CHECK_THROWS_AS(validate_spec(spec_of(Rat(2, 3), Rat(1, 2))), DomainError);  // alpha > beta
    CHECK_THROWS_AS(validate_spec(spec_of(Rat(1, 2), Rat(3, 2))), DomainError);  // beta > 1
}

TEST_CASE("parity drivers") {
    CHECK_THROWS_AS(schedule_driver(ScheduleKind::logstar, 0), DomainError);
    for (uint64_t n = 1; n <= 100; ++n)
        CHECK(schedule_driver(ScheduleKind::logstar, n) == unsigned(log_star(n)));

    CHECK(schedule_driver(ScheduleKind::fast, 1) == 0);
    CHECK(schedule_driver(ScheduleKind::fast, 2) == 0);   // log2 log2 2 = 0
    CHECK(schedule_driver(ScheduleKind::fast, 4) == 1);
    CHECK(schedule_driver(ScheduleKind::fast, 15) == 1);
    CHECK(schedule_driver(ScheduleKind::fast, 16) == 2);
    CHECK(schedule_driver(ScheduleKind::fast, 255) == 2);
    CHECK(schedule_driver(ScheduleKind::fast, 256) == 3);
    CHECK(schedule_driver(ScheduleKind::fast, 65536) == 4);
}

TEST_CASE("block gamma follows driver parity") {
    RegularitySpec spec = spec_of(Rat(1, 2), Rat(4, 5));
    Rat from_alpha = (Rat(1) - spec.alpha) / spec.alpha;  // driver odd
    Rat from_beta = (Rat(1) - spec.beta) / spec.beta;     // driver even
    for (uint64_t n = 1; n <= 100; ++n) {
        unsigned d = schedule_driver(ScheduleKind::logstar, n);
        CHECK(block_gamma(spec, n) == (d % 2 ? from_alpha : from_beta));
    }
}

TEST_CASE("ledger identities") {
    RegularitySpec spec = spec_of(Rat(1, 2), Rat(4, 5));
    auto ledger = build_ledger(spec, 300);
    REQUIRE(ledger.size() == 300);
    BigInt cum(0);
    for (const BlockRecord& rec : ledger) {
        CHECK(rec.r_len == 2 * rec.n - 1);
        CHECK(rec.random_end == BigInt(rec.n) * rec.n);
        // k = ceil(r_len * gamma), checked by rational sandwich.
        CHECK(Rat(rec.k) >= Rat(rec.r_len) * rec.gamma);
        CHECK(Rat(rec.k) - Rat(rec.r_len) * rec.gamma < 1);
        cum += rec.r_len + rec.k;
        CHECK(rec.end == cum);
    }
    SandwichReport sandwich = sandwich_check(spec, ledger);
    CHECK(sandwich.pass);
    CHECK(sandwich.violations == 0);
}

TEST_CASE("degenerate parameter corners") {
    // alpha = beta = 1: no padding at all, so the stream is the raw coin.
    RegularityPrefix raw = build_prefix(spec_of(Rat(1), Rat(1)), 100);
    CHECK(raw.bits.size() == 100);
    CHECK(raw.bits == sample_sequence(BiasSequence::constant(Rat(1, 2)), 100, 17));

    // alpha = beta = 1/2: every block doubles, k_n = r_len.
    auto ledger = build_ledger(spec_of(Rat(1, 2), Rat(1, 2)), 50);
    for (const BlockRecord& rec : ledger) {
        CHECK(rec.k == BigInt(rec.r_len));
        CHECK(rec.end == BigInt(2) * rec.n * rec.n);
    }
}

TEST_CASE("prefix construction and its ledger") {
    RegularitySpec spec = spec_of(Rat(1, 2), Rat(1), ScheduleKind::fast);
    RegularityPrefix p = build_prefix(spec, 5000);
    CHECK(p.bits.size() == 5000);
    CHECK(build_prefix(spec, 5000).bits == p.bits);  // deterministic

    // The ledger holds exactly the fully emitted blocks.
    REQUIRE(!p.ledger.empty());
    CHECK(p.ledger.back().end <= 5000);
    auto full = build_ledger(spec, p.ledger.size() + 1);
    CHECK(full[p.ledger.size()].end > 5000);

    // Padding zeros are where the ledger says they are.
    for (const BlockRecord& rec : p.ledger) {
        BigInt pad_start = rec.end - rec.k;
        for (BigInt i = pad_start; i < rec.end && i < 5000; ++i)
            CHECK(p.bits[static_cast<std::size_t>(i)] == 0);
    }
}

TEST_CASE("sandwich bounds hold at scale") {
    for (auto kind : {ScheduleKind::logstar, ScheduleKind::fast}) {
        RegularitySpec spec = spec_of(Rat(1, 3), Rat(2, 3), kind);
        auto ledger = build_ledger(spec, 2000);
        SandwichReport rep = sandwich_check(spec, ledger);
        CHECK(rep.pass);
    }
}
