#include <iostream>

#include <CLI11.hpp>

#include "casson/cli/acceptance.hpp"
#include "casson/cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace casson::cli;
    RunConfig cfg;
    cfg.threads = threads_from_env();

    CLI::App app{"Representation varieties of (2,q) torus knots and their spliced sums"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "casson 0.1.0");

    const auto odd_q = CLI::Validator(
        [](std::string& s) -> std::string {
            const int q = std::stoi(s);
            return q >= 3 && q % 2 == 1 ? "" : "q must be odd and at least 3";
        },
        "ODD>=3");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "Output file (default: stdout)");
        sub->add_option("--format", cfg.format, "Output format");
        sub->add_option("--seed", cfg.seed, "Seed for randomized suites")->capture_default_str();
        sub->add_option("--tol-rank", cfg.tol_rank, "Relative rank threshold")->capture_default_str();
        sub->add_option("--tol-mat", cfg.tol_mat, "Matrix residual tolerance")->capture_default_str();
    };
    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--q1", cfg.q1, "First torus knot (2,q1)")->required()->check(odd_q);
        sub->add_option("--q2", cfg.q2, "Second torus knot (2,q2)")->required()->check(odd_q);
    };

    auto* enumerate = app.add_subcommand("enumerate", "Catalog isolated irreducible SU(3) representations");
    add_pair(enumerate);
    add_common(enumerate);

    auto* casson = app.add_subcommand("casson", "SU(2) and SU(3) Casson invariants with enumeration cross-check");
    add_pair(casson);
    add_common(casson);

    auto* cohomology = app.add_subcommand("cohomology", "Cohomology dimensions table for sampled representations");
    cohomology->add_option("--q", cfg.q, "Torus knot (2,q)")->check(odd_q)->capture_default_str();
    cohomology->add_option("--samples", cfg.samples, "Samples per case")->check(CLI::PositiveNumber);
    add_common(cohomology);

    auto* spectrum = app.add_subcommand("spectrum", "Truncated spectrum of the torus operator");
    spectrum->add_option("--nmax", cfg.nmax, "Fourier cutoff")->check(CLI::PositiveNumber)->capture_default_str();
    spectrum->add_option("--alpha", cfg.alpha, "Meridian parameters, summing to 0")->delimiter(',');
    spectrum->add_option("--beta", cfg.beta, "Longitude parameters, summing to 0")->delimiter(',');
    add_common(spectrum);

    auto* pillowcase = app.add_subcommand("pillowcase", "SVG of the SU(2) character variety in the pillowcase");
    pillowcase->add_option("--q", cfg.q, "Torus knot (2,q)")->required()->check(odd_q);
    add_common(pillowcase);

    auto* selfcheck = app.add_subcommand("selfcheck", "Run every acceptance suite; exit 0 iff all pass");
    selfcheck->add_option("--only", cfg.only, "Run a single criterion")->check(CLI::Range(1, kCriterionCount));
    add_common(selfcheck);

    CLI11_PARSE(app, argc, argv);

    try {
        for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
        if (*enumerate) return cmd_enumerate(cfg, std::cout, std::cerr);
        if (*casson) return cmd_casson(cfg, std::cout, std::cerr);
        if (*cohomology) return cmd_cohomology(cfg, std::cout, std::cerr);
        if (*spectrum) return cmd_spectrum(cfg, std::cout, std::cerr);
        if (*pillowcase) return cmd_pillowcase(cfg, std::cout, std::cerr);
        return cmd_selfcheck(cfg, std::cout, std::cerr);
    } catch (const casson::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
