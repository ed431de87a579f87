#pragma once

// Library-side command implementations. Each run_* returns the process exit
// code plus the exact bytes destined for stdout; wall time and diagnostics
// are the binary's business. Outputs are byte-identical for a fixed
// (command, config, seed).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace galedim {

struct EstimateOptions {
    std::string input;
    std::vector<std::string> methods;  // subset of compress,fsg,predict; empty means all
    std::size_t window = 0;            // 0 means the default window [ceil(n/2), n]
    std::string format = "json";       // json|csv
    std::string out;                   // report file; empty means stdout
};

struct ConstructOptions {
    std::string kind;  // regularity|selfsimilar|biased
    std::string out;   // sequence file, .bits or .bin
    std::uint64_t n = 0;
    std::optional<std::uint64_t> seed;
    std::string alpha;        // "p/q", regularity only
    std::string beta;         // "p/q", regularity and biased
    std::string schedule = "logstar";
    std::string system_file;  // JSON list of strings, selfsimilar only
    std::string beta_config;  // JSON bias schedule, biased only
    std::string ledger;       // regularity ledger CSV; default out + ".ledger.csv"
    std::string format = "json";
};

struct DeviationOptions {
    std::string beta;         // "p/q" for a constant bias
    std::string beta_config;  // JSON bias schedule
    std::vector<std::uint64_t> ns;
    double eps = 0.1;
    std::uint64_t trials = 0;
    std::optional<std::uint64_t> seed;  // required when trials > 0
    std::string out;                    // CSV file; empty means CSV on stdout
};

struct ValidateOptions {
    std::string input;  // gale, gambler, or predictor JSON
    std::size_t depth = 6;
    std::string format = "json";
    std::string out;
};

struct RunResult {
    int exit_code = 0;
    std::string stdout_text;
};

RunResult run_estimate(const EstimateOptions& opt);
RunResult run_construct(const ConstructOptions& opt);
RunResult run_deviation(const DeviationOptions& opt);
RunResult run_validate(const ValidateOptions& opt);

// FNV-1a 64 over the canonical (sorted-key, compact) dump, as 16 hex digits.
std::string config_digest(const nlohmann::json& config);

}  // namespace galedim
