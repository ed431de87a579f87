#include "galedim/serialize.hpp"

#include <map>

#include "galedim/errors.hpp"
#include "galedim/io.hpp"

namespace galedim {

namespace {

Rat rat_field(const nlohmann::json& j, const char* what) {
    try {
        if (j.is_string()) return parse_rat(j.get<std::string>());
        if (j.is_number_integer()) return Rat(j.get<long long>());
        if (j.is_number_float()) return Rat(j.get<double>());
    } catch (const DomainError&) {
    }
    throw IoError(std::string("cannot read '") + what + "' as a rational");
}

const nlohmann::json& need(const nlohmann::json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw IoError(std::string("missing key '") + key + "'");
    return *it;
}

std::vector<Rat> rat_array(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw IoError(std::string("'") + what + "' must be an array");
    std::vector<Rat> out;
    for (const auto& v : j) out.push_back(rat_field(v, what));
    return out;
}

}  // namespace

nlohmann::json bias_to_json(const BiasSequence& beta) {
    switch (beta.kind()) {
        case BiasKind::constant:
            return {{"type", "constant"}, {"beta", rat_to_string(beta.values()[0])}};
        case BiasKind::periodic:
        case BiasKind::table: {
            nlohmann::json vals = nlohmann::json::array();
            for (const Rat& v : beta.values()) vals.push_back(rat_to_string(v));
            return {{"type", beta.kind() == BiasKind::periodic ? "periodic" : "table"},
                    {"values", vals}};
        }
        case BiasKind::tower:
            return {{"type", "tower"},
                    {"kappa_even", rat_to_string(beta.values()[0])},
                    {"kappa_odd", rat_to_string(beta.values()[1])}};
        case BiasKind::custom:
            return {{"type", "custom"}, {"label", beta.label()}};
    }
    throw IoError("unknown bias kind");
}

BiasSequence bias_from_json(const nlohmann::json& j) {
    std::string type = need(j, "type").get<std::string>();
    if (type == "constant") return BiasSequence::constant(rat_field(need(j, "beta"), "beta"));
    if (type == "periodic") return BiasSequence::periodic(rat_array(need(j, "values"), "values"));
    if (type == "table") return BiasSequence::table(rat_array(need(j, "values"), "values"));
    if (type == "tower")
        return BiasSequence::tower_alternating(rat_field(need(j, "kappa_even"), "kappa_even"),
                                               rat_field(need(j, "kappa_odd"), "kappa_odd"));
    throw IoError("cannot load bias schedule of type '" + type + "'");
}

nlohmann::json gale_to_json(const SGale& g) { return g.to_json(); }

SGale gale_from_json(const nlohmann::json& j) {
    Rat s = rat_field(need(j, "s"), "s");
    std::string kind_name = need(j, "kind").get<std::string>();
    GaleKind kind;
    if (kind_name == "gale")
        kind = GaleKind::gale;
    else if (kind_name == "supergale")
        kind = GaleKind::supergale;
    else
        throw IoError("unknown gale kind '" + kind_name + "'");

    const nlohmann::json& rule = need(j, "rule");
    std::string type = need(rule, "type").get<std::string>();
    if (type == "constant") {
        auto r = constant_rule(rat_field(need(rule, "on0"), "on0"),
                               rat_field(need(rule, "on1"), "on1"));
        return SGale(s, kind, std::move(r), 0.0, Root2Rat(Rat(1)));
    }
    if (type == "measure") {
        SGale base = gale_from_measure(bias_from_json(need(rule, "beta")), s);
        return SGale(s, kind, base.rule_ptr(), base.log2_initial(), base.initial_exact());
    }
    if (type == "cover") {
        const nlohmann::json& strings = need(rule, "strings");
        if (!strings.is_array()) throw IoError("'strings' must be an array");
        std::vector<Bits> A;
        for (const auto& v : strings) A.push_back(bits_from_string(v.get<std::string>()));
        SGale base = cover_gale(A, s, rat_field(need(rule, "s_prime"), "s_prime"));
        return SGale(s, kind, base.rule_ptr(), base.log2_initial(), base.initial_exact());
    }
    if (type == "table") {
        std::size_t depth = need(rule, "depth").get<std::size_t>();
        std::vector<std::pair<std::string, RatBetPair>> entries;
        const nlohmann::json& table = need(rule, "entries");
        if (!table.is_object()) throw IoError("'entries' must be an object");
        for (const auto& [node, bets] : table.items()) {
            if (!bets.is_array() || bets.size() != 2)
                throw IoError("table entry must be a pair of bets");
            entries.emplace_back(node, RatBetPair{rat_field(bets[0], "on0"),
                                                  rat_field(bets[1], "on1")});
        }
        return SGale(s, kind, table_rule(depth, std::move(entries)), 0.0, Root2Rat(Rat(1)));
    }
    throw IoError("cannot load gale rule of type '" + type + "'");
}

nlohmann::json fsg_to_json(const FiniteStateGambler& g) {
    nlohmann::json states = nlohmann::json::array();
    for (const std::string& name : g.state_names()) states.push_back(name);
    nlohmann::json transition = nlohmann::json::object();
    for (std::size_t q = 0; q < g.num_states(); ++q)
        transition[g.state_names()[q]] = {g.state_names()[g.transition()[q][0]],
                                          g.state_names()[g.transition()[q][1]]};
    nlohmann::json accounts = nlohmann::json::array();
    for (std::size_t i = 0; i < g.num_accounts(); ++i) {
        nlohmann::json bets = nlohmann::json::object();
        for (std::size_t q = 0; q < g.num_states(); ++q)
            bets[g.state_names()[q]] = {rat_to_string(g.betting()[i][q].on0),
                                        rat_to_string(g.betting()[i][q].on1)};
        accounts.push_back(
            {{"initial", rat_to_string(g.initial_capitals()[i])}, {"bets", bets}});
    }
    return {{"states", states},
            {"initial_state", g.state_names()[g.initial_state()]},
            {"transition", transition},
            {"accounts", accounts}};
}

FiniteStateGambler fsg_from_json(const nlohmann::json& j) {
    const nlohmann::json& states = need(j, "states");
    if (!states.is_array() || states.empty()) throw IoError("'states' must be a nonempty array");
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    for (const auto& v : states) {
        std::string name = v.get<std::string>();
        if (!index.emplace(name, names.size()).second)
            throw IoError("duplicate state '" + name + "'");
        names.push_back(name);
    }
    auto state_index = [&](const nlohmann::json& v) {
        std::string name = v.get<std::string>();
        auto it = index.find(name);
        if (it == index.end()) throw IoError("unknown state '" + name + "'");
        return it->second;
    };

    std::vector<std::array<std::size_t, 2>> transition(names.size());
    const nlohmann::json& trans = need(j, "transition");
    for (std::size_t q = 0; q < names.size(); ++q) {
        const nlohmann::json& row = need(trans, names[q].c_str());
        if (!row.is_array() || row.size() != 2)
            throw IoError("transition row must list targets for bits 0 and 1");
        transition[q] = {state_index(row[0]), state_index(row[1])};
    }

    const nlohmann::json& accounts = need(j, "accounts");
    if (!accounts.is_array() || accounts.empty())
        throw IoError("'accounts' must be a nonempty array");
    std::vector<std::vector<RatBetPair>> betting;
    std::vector<Rat> initial;
    for (const auto& acct : accounts) {
        initial.push_back(rat_field(need(acct, "initial"), "initial"));
        std::vector<RatBetPair> row(names.size());
        const nlohmann::json& bets = need(acct, "bets");
        for (std::size_t q = 0; q < names.size(); ++q) {
            const nlohmann::json& pair = need(bets, names[q].c_str());
            if (!pair.is_array() || pair.size() != 2)
                throw IoError("bets must be a pair per state");
            row[q] = {rat_field(pair[0], "bet"), rat_field(pair[1], "bet")};
        }
        betting.push_back(std::move(row));
    }

    std::size_t q0 = 0;
    if (auto it = j.find("initial_state"); it != j.end()) q0 = state_index(*it);
    return FiniteStateGambler(std::move(names), std::move(transition), std::move(betting),
                              std::move(initial), q0);
}

nlohmann::json predictor_to_json(const Predictor& pi) { return pi.to_json(); }

PredictorPtr predictor_from_json(const nlohmann::json& j) {
    std::string type = need(j, "type").get<std::string>();
    if (type == "constant") return constant_predictor(rat_field(need(j, "p1"), "p1"));
    if (type == "measure") return measure_predictor(bias_from_json(need(j, "beta")));
    if (type == "laplace") return laplace_predictor();
    if (type == "table") {
        std::size_t depth = need(j, "depth").get<std::size_t>();
        std::vector<std::pair<std::string, Rat>> entries;
        const nlohmann::json& table = need(j, "entries");
        if (!table.is_object()) throw IoError("'entries' must be an object");
        for (const auto& [node, p1] : table.items())
            entries.emplace_back(node, rat_field(p1, "p1"));
        return table_predictor(depth, std::move(entries));
    }
    if (type == "mixture") {
        const nlohmann::json& comps = need(j, "components");
        if (!comps.is_array()) throw IoError("'components' must be an array");
        std::vector<PredictorPtr> components;
        for (const auto& c : comps) components.push_back(predictor_from_json(c));
        return mixture_predictor(std::move(components));
    }
    throw IoError("cannot load predictor of type '" + type + "'");
}

nlohmann::json system_to_json(const SelfSimilarSystem& sys) {
    nlohmann::json out = nlohmann::json::array();
    for (const Bits& u : sys.strings) out.push_back(bits_to_string(u));
    return out;
}

SelfSimilarSystem system_from_json(const nlohmann::json& j) {
    const nlohmann::json* arr = &j;
    if (j.is_object()) arr = &need(j, "strings");
    if (!arr->is_array()) throw IoError("self-similar system must be an array of bit-strings");
    SelfSimilarSystem sys;
    for (const auto& v : *arr) sys.strings.push_back(bits_from_string(v.get<std::string>()));
    validate_system(sys);
    return sys;
}

nlohmann::json regularity_to_json(const RegularitySpec& spec) {
    return {{"alpha", rat_to_string(spec.alpha)},
            {"beta", rat_to_string(spec.beta)},
            {"seed", spec.seed},
            {"schedule", spec.schedule == ScheduleKind::logstar ? "logstar" : "fast"}};
}

RegularitySpec regularity_from_json(const nlohmann::json& j) {
    RegularitySpec spec;
    spec.alpha = rat_field(need(j, "alpha"), "alpha");
    spec.beta = rat_field(need(j, "beta"), "beta");
    if (auto it = j.find("seed"); it != j.end()) spec.seed = it->get<uint64_t>();
    if (auto it = j.find("schedule"); it != j.end()) {
        std::string name = it->get<std::string>();
        if (name == "logstar")
            spec.schedule = ScheduleKind::logstar;
        else if (name == "fast")
            spec.schedule = ScheduleKind::fast;
        else
            throw IoError("unknown schedule '" + name + "'");
    }
    validate_spec(spec);
    return spec;
}

ObjectKind detect_object(const nlohmann::json& j) {
    if (!j.is_object()) throw IoError("object file must hold a JSON object");
    if (j.contains("rule")) return ObjectKind::gale;
    if (j.contains("states")) return ObjectKind::fsg;
    if (j.contains("type")) return ObjectKind::predictor;
    throw IoError("cannot tell whether this is a gale, gambler, or predictor");
}

nlohmann::json load_json_file(const std::string& path) {
    std::string text = read_text_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("JSON parse failure in " + path + ": " + e.what());
    }
}

}  // namespace galedim
