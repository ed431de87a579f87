#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "galedim/bias.hpp"
#include "galedim/cli.hpp"
#include "galedim/errors.hpp"
#include "galedim/io.hpp"
#include "galedim/selfsimilar.hpp"
#include "galedim/serialize.hpp"

using namespace galedim;
namespace fs = std::filesystem;

namespace {

std::string scratch(const std::string& name) {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "galedim_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return (dir / name).string();
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        out.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return out;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t c = line.find(',', pos);
        if (c == std::string::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, c - pos));
        pos = c + 1;
    }
}

bool hex16(const std::string& s) {
    if (s.size() != 16) return false;
    for (char c : s)
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    return true;
}

}  // namespace

TEST_CASE("estimate on an all-zero sequence") {
    std::string input = scratch("zeros.bits");
    write_bits_file(input, Bits(65536, 0));

    EstimateOptions opt;
    opt.input = input;
    opt.methods = {"compress"};
    RunResult r = run_estimate(opt);
    CHECK(r.exit_code == 0);
    nlohmann::json j = parse(r.stdout_text);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "estimate");
    CHECK(j["seed"].is_null());
    CHECK(hex16(j["config_digest"].get<std::string>()));
    const auto& c = j["outputs"]["methods"]["compress"];
    CHECK(c["lower"].get<double>() < 0.1);
    CHECK(c["upper"].get<double>() < 0.1);
    CHECK(c["window"][0] == 32768);
    CHECK(c["window"][1] == 65536);

    CHECK(run_estimate(opt).stdout_text == r.stdout_text);

    EstimateOptions all = opt;
    all.methods.clear();
    nlohmann::json ja = parse(run_estimate(all).stdout_text);
    CHECK(ja["outputs"]["methods"]["fsg"]["gamblers"].size() == 11);
    double io = ja["outputs"]["methods"]["fsg"]["lower"].get<double>();
    double ae = ja["outputs"]["methods"]["fsg"]["upper"].get<double>();
    CHECK(io > 0.1);
    CHECK(io < 0.3);
    CHECK(io <= ae + 1e-9);
    CHECK(ja["outputs"]["methods"]["predict"]["upper"].get<double>() < 0.01);
    CHECK(ja["outputs"]["bound_check"]["lower"]["holds_lower"].get<bool>());

    EstimateOptions pinned = opt;
    pinned.window = 65536;
    nlohmann::json jp = parse(run_estimate(pinned).stdout_text);
    CHECK(jp["outputs"]["methods"]["compress"]["window"][0] == 65536);
    CHECK(jp["outputs"]["methods"]["compress"]["lower"] ==
          jp["outputs"]["methods"]["compress"]["upper"]);
}

TEST_CASE("estimate cross-checks on a biased sequence") {
    std::string input = scratch("quarter.bin");
    write_bits_file(input, sample_sequence(BiasSequence::constant(Rat(1, 4)), 1000000, 77));

    EstimateOptions opt;
    opt.input = input;
    opt.methods = {"compress", "predict"};
    nlohmann::json j = parse(run_estimate(opt).stdout_text);
    const auto& c = j["outputs"]["methods"]["compress"];
    CHECK(c["lower"].get<double>() > 0.70);
    CHECK(c["upper"].get<double>() < 0.95);
    CHECK(j["outputs"]["bound_check"]["pass"].get<bool>());
}

TEST_CASE("estimate delivery and errors") {
    std::string input = scratch("short.bits");
    write_bits_file(input, Bits(256, 1));

    EstimateOptions opt;
    opt.input = input;
    opt.methods = {"compress"};
    std::string direct = run_estimate(opt).stdout_text;

    EstimateOptions to_file = opt;
    to_file.out = scratch("report.json");
    RunResult r = run_estimate(to_file);
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.empty());
    CHECK(read_text_file(to_file.out) == direct);

    EstimateOptions csv = opt;
    csv.format = "csv";
    std::string text = run_estimate(csv).stdout_text;
    CHECK(lines_of(text)[0] == "key,value");
    CHECK(text.find("command,estimate") != std::string::npos);

    EstimateOptions bad = opt;
    bad.methods = {"psychic"};
    CHECK_THROWS_AS(run_estimate(bad), DomainError);
    EstimateOptions wide = opt;
    wide.window = 257;
    CHECK_THROWS_AS(run_estimate(wide), DomainError);
    EstimateOptions gone = opt;
    gone.input = scratch("no-such.bits");
    CHECK_THROWS_AS(run_estimate(gone), IoError);
    EstimateOptions fmt = opt;
    fmt.format = "yaml";
    CHECK_THROWS_AS(run_estimate(fmt), DomainError);
}

TEST_CASE("construct biased sequences") {
    ConstructOptions opt;
    opt.kind = "biased";
    opt.out = scratch("bias.bits");
    opt.n = 4096;
    opt.seed = 5;
    opt.beta = "1/4";
    RunResult r = run_construct(opt);
    CHECK(r.exit_code == 0);
    nlohmann::json j = parse(r.stdout_text);
    CHECK(j["command"] == "construct");
    CHECK(j["seed"] == 5);

    Bits bits = read_bits_file(opt.out);
    REQUIRE(bits.size() == 4096);
    uint64_t ones = 0;
    for (uint8_t b : bits) ones += b;
    CHECK(j["outputs"]["ones"] == ones);
    CHECK(ones > 1024 - 150);
    CHECK(ones < 1024 + 150);

    std::string first_file = read_text_file(opt.out);
    RunResult again = run_construct(opt);
    CHECK(again.stdout_text == r.stdout_text);
    CHECK(read_text_file(opt.out) == first_file);

    ConstructOptions cfg = opt;
    cfg.beta.clear();
    cfg.beta_config = scratch("sched.json");
    write_text_file(cfg.beta_config,
                    nlohmann::json{{"type", "periodic"}, {"values", {"1/4", "3/4"}}}.dump());
    CHECK(run_construct(cfg).exit_code == 0);

    ConstructOptions both = cfg;
    both.beta = "1/4";
    CHECK_THROWS_AS(run_construct(both), DomainError);
    ConstructOptions unseeded = opt;
    unseeded.seed.reset();
    CHECK_THROWS_AS(run_construct(unseeded), DomainError);
    ConstructOptions zero = opt;
    zero.n = 0;
    CHECK_THROWS_AS(run_construct(zero), DomainError);
    ConstructOptions nowhere = opt;
    nowhere.out.clear();
    CHECK_THROWS_AS(run_construct(nowhere), DomainError);
    ConstructOptions alien = opt;
    alien.kind = "fractal";
    CHECK_THROWS_AS(run_construct(alien), DomainError);
}

TEST_CASE("construct self-similar sequences") {
    std::string system = scratch("system.json");
    write_text_file(system, "[\"0\", \"10\"]");
    SelfSimilarSystem sys;
    sys.strings = {{0}, {1, 0}};

    ConstructOptions opt;
    opt.kind = "selfsimilar";
    opt.out = scratch("ss.bits");
    opt.n = 120;
    opt.system_file = system;
    nlohmann::json j = parse(run_construct(opt).stdout_text);
    CHECK(j["outputs"]["dimension"].get<double>() == doctest::Approx(0.6942419136306174));
    CHECK(read_bits_file(opt.out) == selfsimilar_cycle_prefix(sys, 120));

    ConstructOptions seeded = opt;
    seeded.seed = 3;
    run_construct(seeded);
    CHECK(read_bits_file(opt.out) == selfsimilar_sample_prefix(sys, 120, 3));

    ConstructOptions missing = opt;
    missing.system_file.clear();
    CHECK_THROWS_AS(run_construct(missing), DomainError);
}

TEST_CASE("construct regularity prefixes") {
    ConstructOptions opt;
    opt.kind = "regularity";
    opt.out = scratch("reg.bits");
    opt.n = 200;
    opt.seed = 9;
    opt.alpha = "1";
    opt.beta = "1";
    nlohmann::json j = parse(run_construct(opt).stdout_text);
    CHECK(read_bits_file(opt.out) ==
          sample_sequence(BiasSequence::constant(Rat(1, 2)), 200, 9));

    std::string ledger = j["outputs"]["ledger"].get<std::string>();
    CHECK(ledger == opt.out + ".ledger.csv");
    auto rows = lines_of(read_text_file(ledger));
    CHECK(rows[0] == "block,r_len,driver,gamma,k,random_end,end");
    CHECK(rows.size() == j["outputs"]["blocks"].get<std::size_t>() + 1);
    CHECK(fields_of(rows[1])[0] == "1");
    CHECK(fields_of(rows[1])[1] == "1");

    ConstructOptions named = opt;
    named.ledger = scratch("custom.csv");
    nlohmann::json j2 = parse(run_construct(named).stdout_text);
    CHECK(j2["outputs"]["ledger"] == named.ledger);
    CHECK(fs::exists(named.ledger));

    ConstructOptions bad_sched = opt;
    bad_sched.schedule = "slow";
    CHECK_THROWS_AS(run_construct(bad_sched), DomainError);
    ConstructOptions no_alpha = opt;
    no_alpha.alpha.clear();
    CHECK_THROWS_AS(run_construct(no_alpha), DomainError);
}

TEST_CASE("deviation tables") {
    DeviationOptions fair;
    fair.beta = "1/2";
    fair.ns = {4, 16};
    fair.eps = 0.1;
    RunResult r = run_deviation(fair);
    CHECK(r.exit_code == 0);
    auto rows = lines_of(r.stdout_text);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "n,exact,mc,mc_stderr,bound,note");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto f = fields_of(rows[i]);
        REQUIRE(f.size() == 6);
        CHECK(std::stod(f[1]) == 0.0);
        CHECK(f[2].empty());       // trials=0 leaves mc blank
        CHECK(!f[4].empty());
        CHECK(f[5].empty());
    }

    DeviationOptions third;
    third.beta = "1/3";
    third.ns = {10, 50, 100};
    third.eps = 0.1;
    auto third_rows = lines_of(run_deviation(third).stdout_text);
    for (std::size_t i = 1; i < 4; ++i) {
        auto f = fields_of(third_rows[i]);
        CHECK(std::stod(f[1]) <= std::stod(f[4]));
    }

    DeviationOptions mc = third;
    mc.ns = {50};
    mc.trials = 4000;
    mc.seed = 11;
    std::string text = run_deviation(mc).stdout_text;
    CHECK(run_deviation(mc).stdout_text == text);
    auto f = fields_of(lines_of(text)[1]);
    CHECK(std::abs(std::stod(f[2]) - std::stod(f[1])) < 0.05);

    DeviationOptions big = third;
    big.ns = {5000};
    auto fb = fields_of(lines_of(run_deviation(big).stdout_text)[1]);
    CHECK(fb[1].empty());
    CHECK(fb[5] == "mc-only");

    DeviationOptions filed = third;
    filed.out = scratch("dev.csv");
    nlohmann::json env = parse(run_deviation(filed).stdout_text);
    CHECK(env["command"] == "deviation");
    CHECK(env["seed"].is_null());
    CHECK(env["outputs"]["file"] == filed.out);
    CHECK(env["outputs"]["rows"] == 3);
    CHECK(lines_of(read_text_file(filed.out))[0] == "n,exact,mc,mc_stderr,bound,note");

    DeviationOptions empty;
    empty.beta = "1/2";
    CHECK_THROWS_AS(run_deviation(empty), DomainError);
    DeviationOptions flat = fair;
    flat.eps = 0.0;
    CHECK_THROWS_AS(run_deviation(flat), DomainError);
    DeviationOptions unseeded = fair;
    unseeded.trials = 10;
    CHECK_THROWS_AS(run_deviation(unseeded), DomainError);
    DeviationOptions no_bias = fair;
    no_bias.beta.clear();
    CHECK_THROWS_AS(run_deviation(no_bias), DomainError);
}

TEST_CASE("validate verdicts") {
    std::string cover_path = scratch("cover.json");
    SGale cover = cover_gale({{0, 0}, {0, 1}, {1, 1}}, Rat(1), Rat(1, 2));
    write_text_file(cover_path, gale_to_json(cover).dump());
    ValidateOptions vg;
    vg.input = cover_path;
    RunResult r = run_validate(vg);
    CHECK(r.exit_code == 0);
    nlohmann::json j = parse(r.stdout_text);
    CHECK(j["outputs"]["object"] == "gale");
    CHECK(j["outputs"]["pass"] == true);
    CHECK(j["outputs"]["exact_mode"] == true);
    CHECK(j["outputs"]["nodes_checked"] == 63);

    std::string fsg_path = scratch("lossy.json");
    nlohmann::json lossy{
        {"states", {"a"}},
        {"initial_state", "a"},
        {"transition", {{"a", {"a", "a"}}}},
        {"accounts", {{{"initial", "1"}, {"bets", {{"a", {"9/20", "9/20"}}}}}}}};
    write_text_file(fsg_path, lossy.dump());
    ValidateOptions vf;
    vf.input = fsg_path;
    RunResult rf = run_validate(vf);
    CHECK(rf.exit_code == 1);
    nlohmann::json jf = parse(rf.stdout_text);
    CHECK(jf["outputs"]["pass"] == false);
    CHECK(jf["outputs"]["message"].get<std::string>().find("a") != std::string::npos);

    std::string pred_path = scratch("laplace.json");
    write_text_file(pred_path, predictor_to_json(*laplace_predictor()).dump());
    ValidateOptions vp;
    vp.input = pred_path;
    nlohmann::json jp = parse(run_validate(vp).stdout_text);
    CHECK(jp["outputs"]["pass"] == true);
    CHECK(jp["outputs"]["nodes_checked"] == 63);

    ValidateOptions deep = vg;
    deep.depth = 21;
    CHECK_THROWS_AS(run_validate(deep), DomainError);
    std::string mangled = scratch("mangled2.json");
    write_text_file(mangled, "not json");
    ValidateOptions vb;
    vb.input = mangled;
    CHECK_THROWS_AS(run_validate(vb), IoError);

    ValidateOptions csv = vg;
    csv.format = "csv";
    CHECK(lines_of(run_validate(csv).stdout_text)[0] == "key,value");
}

TEST_CASE("config digests") {
    nlohmann::json a{{"x", 1}, {"y", "z"}};
    std::string d = config_digest(a);
    CHECK(hex16(d));
    CHECK(config_digest(a) == d);
    nlohmann::json b = a;
    b["x"] = 2;
    CHECK(config_digest(b) != d);
}
