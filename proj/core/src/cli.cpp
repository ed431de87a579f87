#include "galedim/cli.hpp"

#include <algorithm>
#include <cmath>

#include "galedim/bias.hpp"
#include "galedim/bits.hpp"
#include "galedim/errors.hpp"
#include "galedim/fsg.hpp"
#include "galedim/gale.hpp"
#include "galedim/io.hpp"
#include "galedim/lz78.hpp"
#include "galedim/predictor.hpp"
#include "galedim/regularity.hpp"
#include "galedim/rng.hpp"
#include "galedim/selfsimilar.hpp"
#include "galedim/serialize.hpp"

namespace galedim {

namespace {

constexpr std::size_t kMaxValidateDepth = 20;
constexpr double kCrossCheckSlack = 0.05;

nlohmann::json envelope(const std::string& command, const nlohmann::json& config,
                        const std::optional<uint64_t>& seed, nlohmann::json outputs) {
    nlohmann::json rep{{"schema", 1},
                       {"command", command},
                       {"config_digest", config_digest(config)},
                       {"outputs", std::move(outputs)}};
    if (seed)
        rep["seed"] = *seed;
    else
        rep["seed"] = nullptr;
    return rep;
}

void flatten(const nlohmann::json& j, const std::string& prefix,
             std::vector<std::vector<std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten(v, prefix + "." + std::to_string(i++), rows);
    } else {
        rows.push_back({prefix, j.is_string() ? j.get<std::string>() : j.dump()});
    }
}

std::string render_report(const nlohmann::json& rep, const std::string& format) {
    if (format == "json") return rep.dump(2) + "\n";
    if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        flatten(rep, "", rows);
        std::string text = csv_line({"key", "value"}) + "\n";
        for (const auto& row : rows) text += csv_line(row) + "\n";
        return text;
    }
    throw DomainError("unknown format '" + format + "' (expected json or csv)");
}

RunResult deliver(const nlohmann::json& rep, const std::string& format, const std::string& out,
                  int exit_code) {
    std::string text = render_report(rep, format);
    if (out.empty()) return {exit_code, std::move(text)};
    write_text_file(out, text);
    return {exit_code, ""};
}

BiasSequence bias_from_options(const std::string& beta, const std::string& beta_config) {
    if (!beta.empty() && !beta_config.empty())
        throw DomainError("give either --beta or --beta-config, not both");
    if (!beta.empty()) return BiasSequence::constant(parse_rat(beta));
    if (!beta_config.empty()) return bias_from_json(load_json_file(beta_config));
    throw DomainError("a bias is required: --beta p/q or --beta-config file.json");
}

double clamp(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

nlohmann::json bound_check_json(const BoundCheck& bc) {
    return {{"p", bc.p},           {"d", bc.d},
            {"slack", bc.slack},   {"lower", bc.lower},
            {"upper", bc.upper},   {"holds_lower", bc.holds_lower},
            {"holds_upper", bc.holds_upper}};
}

}  // namespace

std::string config_digest(const nlohmann::json& config) {
    std::string dump = config.dump();
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 0xf];
    return out;
}

RunResult run_estimate(const EstimateOptions& opt) {
    std::vector<std::string> methods = opt.methods;
    if (methods.empty()) methods = {"compress", "fsg", "predict"};
    for (const std::string& m : methods)
        if (m != "compress" && m != "fsg" && m != "predict")
            throw DomainError("unknown method '" + m + "'");
    auto has = [&](const char* m) {
        return std::find(methods.begin(), methods.end(), m) != methods.end();
    };

    Bits w = read_bits_file(opt.input);
    std::size_t n = w.size();
    if (opt.window > n) throw DomainError("--window exceeds the sequence length");

    nlohmann::json out{{"input", opt.input}, {"n", n}};
    nlohmann::json per = nlohmann::json::object();

    bool have_dim = false;
    double dim_lower = 2.0, dim_upper = 0.0;

    if (has("compress")) {
        DimEstimates est = dim_estimates(compress_trace(w, default_checkpoints(n)), opt.window);
        per["compress"] = {{"lower", est.lower},
                           {"upper", est.upper},
                           {"window", {est.window_lo, est.window_hi}}};
        dim_lower = std::min(dim_lower, est.lower);
        dim_upper = std::max(dim_upper, est.upper);
        have_dim = true;
    }

    if (has("fsg")) {
        double best_io = 1.0, best_ae = 1.0;
        nlohmann::json gamblers = nlohmann::json::array();
        for (const auto& [name, g] : standard_gamblers()) {
            double io = success_exponent_search(g, w, SuccessMode::io);
            double ae = success_exponent_search(g, w, SuccessMode::ae);
            gamblers.push_back({{"name", name}, {"io", io}, {"ae", ae}});
            best_io = std::min(best_io, io);
            best_ae = std::min(best_ae, ae);
        }
        per["fsg"] = {{"lower", best_io}, {"upper", best_ae}, {"gamblers", gamblers}};
        dim_lower = std::min(dim_lower, best_io);
        dim_upper = std::max(dim_upper, best_ae);
        have_dim = true;
    }

    std::optional<LossTrace> predict;
    if (has("predict")) {
        LossTrace trace = log_loss_trace(*laplace_predictor(), w, opt.window);
        per["predict"] = {{"lower", trace.rate_lower},
                          {"upper", trace.rate_upper},
                          {"predictability", {trace.pred_lower, trace.pred_upper}},
                          {"window", {trace.window_lo, trace.window_hi}}};
        predict = trace;
    }

    out["methods"] = std::move(per);

    if (predict && have_dim) {
        BoundCheck lo = bound_check(clamp(predict->pred_upper, 0.5, 1.0),
                                    clamp(dim_lower, 0.0, 1.0), kCrossCheckSlack);
        BoundCheck hi = bound_check(clamp(predict->pred_lower, 0.5, 1.0),
                                    clamp(dim_upper, 0.0, 1.0), kCrossCheckSlack);
        out["bound_check"] = {{"lower", bound_check_json(lo)},
                              {"upper", bound_check_json(hi)},
                              {"pass", lo.holds_lower && hi.holds_upper}};
    }

    // The digest identifies the computation; delivery paths and rendering do
    // not belong in it.
    nlohmann::json config{{"command", "estimate"},
                          {"input", opt.input},
                          {"methods", methods},
                          {"window", opt.window}};
    return deliver(envelope("estimate", config, std::nullopt, std::move(out)), opt.format,
                   opt.out, 0);
}

RunResult run_construct(const ConstructOptions& opt) {
    if (opt.out.empty()) throw DomainError("--out is required");
    if (opt.n == 0) throw DomainError("--n must be positive");

    nlohmann::json config{{"command", "construct"},
                          {"kind", opt.kind},
                          {"n", opt.n},
                          {"alpha", opt.alpha},
                          {"beta", opt.beta},
                          {"schedule", opt.schedule},
                          {"system", opt.system_file},
                          {"beta_config", opt.beta_config}};
    if (opt.seed) config["seed"] = *opt.seed;

    nlohmann::json out{{"file", opt.out}, {"n", opt.n}};

    if (opt.kind == "regularity") {
        if (opt.alpha.empty() || opt.beta.empty())
            throw DomainError("regularity needs --alpha and --beta");
        if (!opt.seed) throw DomainError("--seed is required for regularity");
        RegularitySpec spec;
        spec.alpha = parse_rat(opt.alpha);
        spec.beta = parse_rat(opt.beta);
        spec.seed = *opt.seed;
        if (opt.schedule == "logstar")
            spec.schedule = ScheduleKind::logstar;
        else if (opt.schedule == "fast")
            spec.schedule = ScheduleKind::fast;
        else
            throw DomainError("unknown schedule '" + opt.schedule + "'");
        RegularityPrefix prefix = build_prefix(spec, opt.n);
        write_bits_file(opt.out, prefix.bits);
        std::string ledger_path = opt.ledger.empty() ? opt.out + ".ledger.csv" : opt.ledger;
        std::vector<std::vector<std::string>> rows;
        for (const BlockRecord& rec : prefix.ledger)
            rows.push_back({std::to_string(rec.n), std::to_string(rec.r_len),
                            std::to_string(rec.driver), rat_to_string(rec.gamma), rec.k.str(),
                            rec.random_end.str(), rec.end.str()});
        write_csv(ledger_path, {"block", "r_len", "driver", "gamma", "k", "random_end", "end"},
                  rows);
        out["ledger"] = ledger_path;
        out["blocks"] = prefix.ledger.size();
    } else if (opt.kind == "selfsimilar") {
        if (opt.system_file.empty()) throw DomainError("selfsimilar needs --system file.json");
        SelfSimilarSystem sys = system_from_json(load_json_file(opt.system_file));
        Bits bits = opt.seed ? selfsimilar_sample_prefix(sys, opt.n, *opt.seed)
                             : selfsimilar_cycle_prefix(sys, opt.n);
        write_bits_file(opt.out, bits);
        out["dimension"] = selfsimilar_dimension(sys);
    } else if (opt.kind == "biased") {
        if (!opt.seed) throw DomainError("--seed is required for biased sampling");
        BiasSequence beta = bias_from_options(opt.beta, opt.beta_config);
        Bits bits = sample_sequence(beta, opt.n, *opt.seed);
        write_bits_file(opt.out, bits);
        uint64_t ones = 0;
        for (uint8_t b : bits) ones += b;
        out["ones"] = ones;
    } else {
        throw DomainError("unknown kind '" + opt.kind +
                          "' (expected regularity, selfsimilar, or biased)");
    }

    nlohmann::json rep = envelope("construct", config, opt.seed, std::move(out));
    return {0, render_report(rep, opt.format)};
}

RunResult run_deviation(const DeviationOptions& opt) {
    if (opt.ns.empty()) throw DomainError("at least one --n is required");
    if (!(opt.eps > 0)) throw DomainError("--eps must be positive");
    if (opt.trials > 0 && !opt.seed)
        throw DomainError("--seed is required when --trials > 0");
    BiasSequence beta = bias_from_options(opt.beta, opt.beta_config);

    double delta = std::min(static_cast<double>(beta.lower_bound()),
                            1.0 - static_cast<double>(beta.upper_bound()));
    std::optional<ChernoffBound> cb;
    if (delta > 0) {
        try {
            cb = chernoff_alpha(delta, opt.eps);
        } catch (const DomainError&) {
        } catch (const NumericError&) {
        }
    }

    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < opt.ns.size(); ++i) {
        std::size_t n = static_cast<std::size_t>(opt.ns[i]);
        std::vector<std::string> row(6);
        row[0] = std::to_string(n);
        std::string note;
        try {
            ExactTail exact = deviation_tail_exact(beta, n, opt.eps);
            row[1] = nlohmann::json(exact.probability).dump();
        } catch (const ResourceError&) {
            note = "mc-only";
        }
        if (opt.trials > 0) {
            McTail mc = deviation_tail_mc(beta, n, opt.eps, opt.trials,
                                          derive_seed(*opt.seed, i));
            row[2] = nlohmann::json(mc.probability).dump();
            row[3] = nlohmann::json(mc.std_error).dump();
        }
        if (cb) row[4] = nlohmann::json(tail_bound(*cb, n)).dump();
        row[5] = note;
        rows.push_back(std::move(row));
    }

    std::vector<std::string> header{"n", "exact", "mc", "mc_stderr", "bound", "note"};
    if (!opt.out.empty()) {
        write_csv(opt.out, header, rows);
        nlohmann::json config{{"command", "deviation"},
                              {"beta", opt.beta},
                              {"beta_config", opt.beta_config},
                              {"n", opt.ns},
                              {"eps", opt.eps},
                              {"trials", opt.trials}};
        if (opt.seed) config["seed"] = *opt.seed;
        nlohmann::json out{{"file", opt.out}, {"rows", rows.size()}};
        if (cb) out["chernoff"] = {{"theta", cb->theta}, {"alpha", cb->alpha}};
        return {0, envelope("deviation", config, opt.seed, std::move(out)).dump(2) + "\n"};
    }
    std::string text = csv_line(header) + "\n";
    for (const auto& row : rows) text += csv_line(row) + "\n";
    return {0, std::move(text)};
}

RunResult run_validate(const ValidateOptions& opt) {
    if (opt.depth > kMaxValidateDepth) throw DomainError("--depth is capped at 20");
    nlohmann::json doc = load_json_file(opt.input);
    ObjectKind kind = detect_object(doc);

    nlohmann::json out{{"input", opt.input}};
    bool pass = false;

    switch (kind) {
        case ObjectKind::gale: {
            SGale g = gale_from_json(doc);
            ValidationReport rep = validate(g, opt.depth);
            pass = rep.pass;
            out["object"] = "gale";
            out["pass"] = rep.pass;
            out["exact_mode"] = rep.exact_mode;
            out["nodes_checked"] = rep.nodes_checked;
            out["worst_rel"] = rep.worst_rel;
            if (!rep.pass) out["worst_node"] = rep.worst_node;
            break;
        }
        case ObjectKind::fsg: {
            FiniteStateGambler g = fsg_from_json(doc);
            auto check = g.check();
            pass = check.pass;
            out["object"] = "fsg";
            out["pass"] = check.pass;
            if (!check.pass) out["message"] = check.message;
            break;
        }
        case ObjectKind::predictor: {
            PredictorPtr pi = predictor_from_json(doc);
            std::size_t nodes = 0;
            double worst = 0;
            std::string worst_node;
            std::vector<Bits> level{{}};
            for (std::size_t d = 0; d < opt.depth; ++d) {
                std::vector<Bits> next;
                for (const Bits& node : level) {
                    double p0 = pi->prob(node, 0), p1 = pi->prob(node, 1);
                    double gap = std::max(
                        {std::abs(p0 + p1 - 1.0), -std::min(p0, p1), std::max(p0, p1) - 1.0});
                    if (gap > worst) {
                        worst = gap;
                        worst_node = bits_to_string(node);
                    }
                    ++nodes;
                    for (uint8_t b : {0, 1}) {
                        Bits child = node;
                        child.push_back(b);
                        next.push_back(std::move(child));
                    }
                }
                level = std::move(next);
            }
            pass = worst <= 1e-9;
            out["object"] = "predictor";
            out["pass"] = pass;
            out["nodes_checked"] = nodes;
            out["worst_gap"] = worst;
            if (!pass) out["worst_node"] = worst_node;
            break;
        }
    }

    nlohmann::json config{{"command", "validate"},
                          {"input", opt.input},
                          {"depth", opt.depth}};
    return deliver(envelope("validate", config, std::nullopt, std::move(out)), opt.format,
                   opt.out, pass ? 0 : 1);
}

}  // namespace galedim
