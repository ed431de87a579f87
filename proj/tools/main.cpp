#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "galedim/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Gale calculus toolkit: dimension estimates, sequence construction, "
                 "deviation tables, object validation"};
    app.require_subcommand(1);

    galedim::EstimateOptions eopt;
    auto* est = app.add_subcommand("estimate", "Dimension estimates for a bit-sequence file");
    est->add_option("input", eopt.input, "sequence file (.bits or .bin)")->required();
    est->add_option("--methods", eopt.methods, "subset of compress,fsg,predict (default all)")
        ->delimiter(',');
    est->add_option("--window", eopt.window, "first position of the estimate window");
    est->add_option("--format", eopt.format, "json or csv");
    est->add_option("--out", eopt.out, "write the report here instead of stdout");

    galedim::ConstructOptions copt;
    auto* con = app.add_subcommand("construct", "Generate a sequence prefix");
    con->add_option("--kind", copt.kind, "regularity, selfsimilar, or biased")->required();
    con->add_option("--out", copt.out, "output sequence file (.bits or .bin)")->required();
    con->add_option("--n", copt.n, "prefix length")->required();
    con->add_option("--seed", copt.seed, "PRNG seed");
    con->add_option("--alpha", copt.alpha, "regularity block density as p/q");
    con->add_option("--beta", copt.beta, "bias as p/q");
    con->add_option("--schedule", copt.schedule, "regularity parity driver: logstar or fast");
    con->add_option("--system", copt.system_file, "self-similar system JSON file");
    con->add_option("--beta-config", copt.beta_config, "bias schedule JSON file");
    con->add_option("--ledger", copt.ledger, "regularity ledger CSV path");
    con->add_option("--format", copt.format, "json or csv");

    galedim::DeviationOptions dopt;
    auto* dev = app.add_subcommand("deviation", "Self-information tail probabilities");
    dev->add_option("--beta", dopt.beta, "bias as p/q");
    dev->add_option("--beta-config", dopt.beta_config, "bias schedule JSON file");
    dev->add_option("--n", dopt.ns, "prefix lengths, repeatable")->delimiter(',');
    dev->add_option("--eps", dopt.eps, "per-bit deviation threshold");
    dev->add_option("--trials", dopt.trials, "Monte-Carlo trials per n (0 skips MC)");
    dev->add_option("--seed", dopt.seed, "PRNG seed");
    dev->add_option("--out", dopt.out, "CSV path; stdout when absent");

    galedim::ValidateOptions vopt;
    auto* val = app.add_subcommand("validate", "Invariant checks for a gale, gambler, or "
                                               "predictor JSON file");
    val->add_option("input", vopt.input, "object JSON file")->required();
    val->add_option("--depth", vopt.depth, "node depth to check");
    val->add_option("--format", vopt.format, "json or csv");
    val->add_option("--out", vopt.out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    galedim::RunResult result;
    try {
        if (est->parsed())
            result = galedim::run_estimate(eopt);
        else if (con->parsed())
            result = galedim::run_construct(copt);
        else if (dev->parsed())
            result = galedim::run_deviation(dopt);
        else
            result = galedim::run_validate(vopt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << result.stdout_text;
    std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
    std::cerr << "wall_time_s=" << wall.count() << "\n";
    return result.exit_code;
}
