#include "casson/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <string>
#include <thread>

#include "casson/cli/acceptance.hpp"
#include "casson/cli/emit.hpp"
#include "casson/cohomology.hpp"
#include "casson/knotrep.hpp"
#include "casson/splice.hpp"
#include "casson/torusop.hpp"

namespace casson::cli {

namespace {

using nlohmann::json;

RunMeta meta_of(const RunConfig& cfg) { return {cfg.subcommand, cfg.seed, cfg.tol_rank, cfg.tol_mat, cfg.threads}; }

std::string format_or(const RunConfig& cfg, const std::string& fallback, std::initializer_list<const char*> allowed) {
    const std::string f = cfg.format.empty() ? fallback : cfg.format;
    for (const char* a : allowed)
        if (f == a) return f;
    throw ValidationError("format '" + f + "' is not available for " + cfg.subcommand);
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
    if (cfg.out.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + cfg.out + " for writing");
    f << payload;
}

long closed_formula(int q1, int q2) { return (long(q1) * q1 - 1) * (long(q2) * q2 - 1) / 4; }

}  // namespace

int threads_from_env() {
    const int hw = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("CASSON_THREADS");
    if (!env || !*env) return hw;
    const int cap = std::atoi(env);
    return cap >= 1 ? std::min(cap, hw) : 1;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    validate_q(cfg.q1);
    validate_q(cfg.q2);
    const auto fmt = format_or(cfg, "json", {"json", "csv"});
    const auto result = enumerate_isolated(cfg.q1, cfg.q2, cfg.threads);
    emit(cfg, out, fmt == "json" ? catalog_json(result, meta_of(cfg)).dump(2) + "\n" : catalog_csv(result));
    const long formula = closed_formula(cfg.q1, cfg.q2);
    const auto count = static_cast<long>(result.distinct_classes);
    log << "(" << cfg.q1 << "," << cfg.q2 << ") count " << count << ", formula " << formula << ", "
        << result.rejected.size() << " gluings rejected" << (count == formula ? "" : " MISMATCH") << "\n";
    return count == formula ? 0 : 1;
}

int cmd_casson(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    validate_q(cfg.q1);
    validate_q(cfg.q2);
    const auto fmt = format_or(cfg, "text", {"text", "json"});
    const long l1 = casson_su2_knot(cfg.q1), l2 = casson_su2_knot(cfg.q2);
    const long inv = casson_su3_spliced(cfg.q1, cfg.q2);
    const auto count = static_cast<long>(enumerate_isolated(cfg.q1, cfg.q2, cfg.threads).distinct_classes);
    if (fmt == "json") {
        json j{{"meta", to_json(meta_of(cfg))},
               {"q1", cfg.q1},
               {"q2", cfg.q2},
               {"lambda_su2_k1", l1},
               {"lambda_su2_k2", l2},
               {"lambda_su3", inv},
               {"enumerated_classes", count}};
        emit(cfg, out, j.dump(2) + "\n");
    } else {
        emit(cfg, out,
             "lambda'(K1) " + std::to_string(l1) + "\nlambda'(K2) " + std::to_string(l2) + "\nlambda_SU(3) " +
                 std::to_string(inv) + "\nenumerated " + std::to_string(count) + "\n");
    }
    if (count != inv) log << "enumeration cross-check differs: " << count << " classes vs " << inv << "\n";
    return 0;
}

int cmd_cohomology(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    validate_q(cfg.q);
    const auto fmt = format_or(cfg, "csv", {"csv", "json"});
    std::mt19937_64 rng(cfg.seed);
    std::vector<CohomologyRow> rows;
    int mismatches = 0;
    for (RepCase c : {RepCase::central, RepCase::abelian_generic, RepCase::bifurcation, RepCase::irreducible})
        for (int i = 0; i < cfg.samples; ++i) {
            const auto dims = cohomology_dims(sample_rep(c, cfg.q, rng), cfg.tol_rank);
            const auto want = expected_dims(c, 2, cfg.q);
            mismatches += !(dims == want);
            rows.push_back({dims, want});
        }
    if (fmt == "csv") {
        emit(cfg, out, cohomology_csv(rows));
    } else {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"case", to_string(r.dims.rep_case)},
                           {"p", r.dims.p},
                           {"q", r.dims.q},
                           {"h0", r.dims.h0},
                           {"h1", r.dims.h1},
                           {"W_A", r.dims.w_a},
                           {"expected", {r.expected.h0, r.expected.h1, r.expected.w_a}}});
        emit(cfg, out, json{{"meta", to_json(meta_of(cfg))}, {"rows", arr}}.dump(2) + "\n");
    }
    if (mismatches) log << mismatches << " rows differ from the expected dimensions\n";
    return mismatches ? 1 : 0;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    format_or(cfg, "csv", {"csv"});
    const auto p = HolonomyParam::make(cfg.alpha, cfg.beta);
    const auto blocks = truncated_spectrum(p, p.n(), cfg.nmax);
    emit(cfg, out, spectrum_csv(blocks));
    log << "harmonic dimension " << harmonic_dims(p, p.n()) << ", zero eigenvalues "
        << zero_eigenvalue_count(blocks) << "\n";
    return 0;
}

int cmd_pillowcase(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    validate_q(cfg.q);
    format_or(cfg, "svg", {"svg"});
    emit(cfg, out, pillowcase_svg(cfg.q));
    return 0;
}

int cmd_selfcheck(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const AcceptanceOptions opts{cfg.seed, cfg.tol_rank, cfg.tol_mat, cfg.threads};
    std::vector<CriterionResult> results;
    if (cfg.only)
        results.push_back(run_criterion(*cfg.only, opts));
    else
        results = run_acceptance(opts);
    emit(cfg, out, format_report(results, opts));
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; }) ? 0 : 1;
}

}  // namespace casson::cli
