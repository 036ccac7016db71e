#include "casson/cli/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "casson/cli/emit.hpp"
#include "casson/cohomology.hpp"
#include "casson/knotrep.hpp"
#include "casson/maslov.hpp"
#include "casson/splice.hpp"
#include "casson/torusop.hpp"
#include "casson/twist.hpp"

namespace casson::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Pinned thresholds; the matrix and rank tolerances come from AcceptanceOptions.
constexpr double kEnumerationSeconds = 5.0;
constexpr double kCohomologySeconds = 10.0;
constexpr double kMaslovSeconds = 10.0;
constexpr double kZeroEigenvalue = 1e-9;
constexpr double kFinalAngle = 1e-3;
constexpr double kEndpointTol = 1e-10;
constexpr double kInvariantTol = 1e-9;
constexpr int kSamplesPerCase = 50;
constexpr int kMaslovTriples = 200;
constexpr int kArcSamples = 1000;
constexpr int kMobiusSamples = 100;

const std::vector<std::pair<int, int>> kHeadlinePairs{{3, 3}, {3, 5}, {5, 5}, {3, 7}, {5, 7}};

long headline_formula(int q1, int q2) { return (long(q1) * q1 - 1) * (long(q2) * q2 - 1) / 4; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<EnumerationResult>& headline_enumerations(int threads, double* elapsed = nullptr) {
    static std::map<int, std::vector<EnumerationResult>> cache;
    static std::map<int, double> timing;
    auto it = cache.find(threads);
    if (it == cache.end()) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<EnumerationResult> all;
        for (const auto& [q1, q2] : kHeadlinePairs) all.push_back(enumerate_isolated(q1, q2, threads));
        timing[threads] = seconds_since(t0);
        it = cache.emplace(threads, std::move(all)).first;
    }
    if (elapsed) *elapsed = timing[threads];
    return it->second;
}

CriterionResult isolated_count(const AcceptanceOptions& o) {
    CriterionResult r{1, "isolated representation count equals (q1^2-1)(q2^2-1)/4", true, "", 0};
    double elapsed = 0;
    const auto& all = headline_enumerations(o.threads, &elapsed);
    std::ostringstream os;
    for (const auto& e : all) {
        const long want = headline_formula(e.q1, e.q2);
        const auto got = static_cast<long>(e.distinct_classes);
        if (got != want) r.passed = false;
        os << "(" << e.q1 << "," << e.q2 << ") " << got << "/" << want << " [" << e.rejected.size()
           << " gluings rejected]; ";
    }
    if (elapsed > kEnumerationSeconds) {
        r.passed = false;
        os << "runtime over " << kEnumerationSeconds << " s";
    }
    r.detail = os.str();
    return r;
}

CriterionResult casson_formula(const AcceptanceOptions& o) {
    CriterionResult r{2, "SU(3) Casson invariant equals 16*l'(K1)*l'(K2) and the enumeration count", true, "", 0};
    std::ostringstream os;
    for (const auto& e : headline_enumerations(o.threads)) {
        const long closed = 16 * casson_su2_knot(e.q1) * casson_su2_knot(e.q2);
        const long inv = casson_su3_spliced(e.q1, e.q2);
        const auto count = static_cast<long>(e.distinct_classes);
        if (inv != closed || inv != count) r.passed = false;
        os << "(" << e.q1 << "," << e.q2 << ") invariant " << inv << ", enumerated " << count << "; ";
    }
    r.detail = os.str();
    return r;
}

CriterionResult intersection_counts(const AcceptanceOptions&) {
    CriterionResult r{3, "per-arc intersection counts equal (q1-k1)(q2-k2) and the lattice oracle", true, "", 0};
    int checked = 0;
    std::ostringstream os;
    for (int q1 = 3; q1 <= 9; q1 += 2)
        for (int q2 = 3; q2 <= 9; q2 += 2)
            for (int k1 = 1; k1 <= q1 - 2; k1 += 2)
                for (int k2 = 1; k2 <= q2 - 2; k2 += 2) {
                    const long want = long(q1 - k1) * (q2 - k2);
                    const auto exact = static_cast<long>(intersection_points(q1, k1, q2, k2).size());
                    const long lattice = lattice_intersection_count(q1, k1, q2, k2);
                    ++checked;
                    if (exact != want || lattice != want) {
                        r.passed = false;
                        os << "(" << q1 << "," << k1 << "," << q2 << "," << k2 << ") exact " << exact << " lattice "
                           << lattice << " want " << want << "; ";
                    }
                }
    r.detail = std::to_string(checked) + " arc pairs checked; " + os.str();
    return r;
}

CriterionResult catalog_validity(const AcceptanceOptions& o) {
    CriterionResult r{4, "every catalog entry satisfies relations, irreducibility, block form, splice matching", true,
                      "", 0};
    std::size_t entries = 0, bad = 0;
    double worst_rel = 0, worst_bdy = 0;
    for (const auto& e : headline_enumerations(o.threads))
        for (const auto& rep : e.catalog) {
            ++entries;
            const auto v = validate_isolated(rep);
            worst_rel = std::max(worst_rel, v.relation_residual);
            worst_bdy = std::max(worst_bdy, v.boundary_residual);
            if (v.relation_residual > o.tol_mat || v.boundary_residual > o.tol_mat || v.commutant != 1 ||
                !v.left_block_reducible || !v.right_block_reducible)
                ++bad;
        }
    r.passed = bad == 0 && entries > 0;
    std::ostringstream os;
    os << entries << " entries, " << bad << " failing; worst relation " << format_double(worst_rel)
       << ", worst boundary " << format_double(worst_bdy);
    r.detail = os.str();
    return r;
}

CriterionResult cohomology_tables(const AcceptanceOptions& o) {
    CriterionResult r{5, "cohomology (h0, h1, W_A) and torus (h0, h1) match in every case", true, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(o.seed);
    int samples = 0, bad = 0;
    std::string first_problem;
    for (RepCase c : {RepCase::central, RepCase::abelian_generic, RepCase::bifurcation, RepCase::irreducible})
        for (int q : {3, 5, 7})
            for (int i = 0; i < kSamplesPerCase; ++i) {
                ++samples;
                try {
                    const auto rep = sample_rep(c, q, rng);
                    const auto got = cohomology_dims(rep, o.tol_rank);
                    if (!(got == expected_dims(c, 2, q))) {
                        ++bad;
                        if (first_problem.empty())
                            first_problem = std::string(to_string(c)) + " q=" + std::to_string(q) + " gave (" +
                                            std::to_string(got.h0) + "," + std::to_string(got.h1) + "," +
                                            std::to_string(got.w_a) + ")";
                    }
                } catch (const std::exception& ex) {
                    ++bad;
                    if (first_problem.empty()) first_problem = ex.what();
                }
            }
    // torus: central, diagonal, and conjugated diagonal holonomies
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < kSamplesPerCase; ++i)
        for (int kind = 0; kind < 3; ++kind) {
            ++samples;
            const double a = 0.05 + 0.4 * unit(rng), b = 0.05 + 0.4 * unit(rng);
            Mat mu = Mat::Identity(2, 2), la = Mat::Identity(2, 2);
            if (kind == 0) {
                mu *= std::polar(1.0, 2 * kPi * a);
                la *= std::polar(1.0, 2 * kPi * b);
            } else {
                mu(0, 0) = std::polar(1.0, 2 * kPi * a);
                mu(1, 1) = std::conj(mu(0, 0));
                la(0, 0) = std::polar(1.0, 2 * kPi * b);
                la(1, 1) = std::conj(la(0, 0));
            }
            if (kind == 2) {
                const Mat g = haar_unitary(2, rng);
                mu = g * mu * g.adjoint();
                la = g * la * g.adjoint();
            }
            try {
                const auto d = torus_h_dims(mu, la, o.tol_rank);
                const std::pair<int, int> want = kind == 0 ? std::pair{4, 8} : std::pair{2, 4};
                if (d != want) {
                    ++bad;
                    if (first_problem.empty()) first_problem = "torus kind " + std::to_string(kind);
                }
            } catch (const std::exception& ex) {
                ++bad;
                if (first_problem.empty()) first_problem = ex.what();
            }
        }
    const double secs = seconds_since(t0);
    r.passed = bad == 0 && secs < kCohomologySeconds;
    std::ostringstream os;
    os << samples << " samples, " << bad << " mismatches";
    if (!first_problem.empty()) os << "; first: " << first_problem;
    if (secs >= kCohomologySeconds) os << "; runtime over " << kCohomologySeconds << " s";
    r.detail = os.str();
    return r;
}

CriterionResult harmonic_dimensions(const AcceptanceOptions&) {
    CriterionResult r{6, "torus harmonic dimensions 32/8/16 agree with truncated spectra", true, "", 0};
    const std::vector<std::pair<HolonomyParam, int>> cases{
        {HolonomyParam::make({0, 0, 0}, {0, 0, 0}), 32},
        {HolonomyParam::make({0.3, -0.1, -0.2}, {0.15, 0.05, -0.2}), 8},
        {HolonomyParam::make({0.5, -0.5, 0}, {0.5, -0.5, 0}), 16}};
    std::ostringstream os;
    for (const auto& [p, want] : cases) {
        const int dims = harmonic_dims(p, 3);
        const int zeros = zero_eigenvalue_count(truncated_spectrum(p, 3, 8), kZeroEigenvalue);
        if (dims != want || zeros != want) r.passed = false;
        os << dims << "/" << zeros << " (want " << want << "); ";
    }
    r.detail = os.str();
    return r;
}

CriterionResult limit_convergence(const AcceptanceOptions&) {
    CriterionResult r{7, "perturbed small eigenspaces converge to K+(theta) along every direction", true, "", 0};
    const std::vector<HolonomyParam> bases{HolonomyParam::make({0, 0, 0}, {0, 0, 0}),
                                           HolonomyParam::make({0.5, -0.5, 0}, {0.5, -0.5, 0})};
    const std::vector<cplx> dirs{{1, 0}, {0, 1}, {1, 1}, {-1, 0.5}, {-0.3, -1}};
    std::ostringstream os;
    double worst = 0;
    int runs = 0;
    for (const auto& b : bases)
        for (cplx d : dirs) {
            const auto rep = limit_convergence_check(b, 0, 1, d);
            ++runs;
            worst = std::max(worst, rep.angles.back());
            if (!rep.passes(kFinalAngle)) r.passed = false;
        }
    os << runs << " approaches, largest final angle " << format_double(worst);
    r.detail = os.str();
    return r;
}

CriterionResult maslov_identities(const AcceptanceOptions& o) {
    CriterionResult r{8, "triple-index identities hold on random Lagrangian triples", true, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(o.seed ^ 0x5eedULL);
    int failures = 0, nonzero_intersections = 0;
    for (int n : {1, 2, 4}) {
        const auto sp = SymplecticSpace::standard(n);
        for (int k = 0; k < kMaslovTriples; ++k) {
            const auto l1 = random_lagrangian(sp, rng);
            auto l2 = random_lagrangian(sp, rng);
            auto l3 = random_lagrangian(sp, rng);
            // every third triple has JL1 ∩ L2 ≠ 0, every third JL2 ∩ L3 ≠ 0
            if (k % 3 == 1) l2 = random_lagrangian_containing(sp, (sp.J() * l1.basis()).leftCols(1), rng);
            if (k % 3 == 2) l3 = random_lagrangian_containing(sp, (sp.J() * l2.basis()).leftCols(1), rng);
            const int d12 = intersection_dim(apply_J(sp, l1), l2);
            const int d23 = intersection_dim(apply_J(sp, l2), l3);
            nonzero_intersections += (d12 > 0) + (d23 > 0);
            const bool ok = triple_index(sp, l1, l1, l2) == 0 && triple_index(sp, l1, l2, l2) == 0 &&
                            triple_index(sp, l1, l2, l1) == d12 &&
                            triple_index(sp, l1, l2, l3) == d23 - triple_index(sp, l1, l3, l2);
            if (!ok) ++failures;
        }
    }
    const double secs = seconds_since(t0);
    r.passed = failures == 0 && secs < kMaslovSeconds;
    std::ostringstream os;
    os << 3 * kMaslovTriples << " triples, " << failures << " failures, " << nonzero_intersections
       << " with nontrivial intersections";
    if (secs >= kMaslovSeconds) os << "; runtime over " << kMaslovSeconds << " s";
    r.detail = os.str();
    return r;
}

CriterionResult splice_parity(const AcceptanceOptions&) {
    CriterionResult r{9, "boundary triple indices are even and identity-forced terms vanish", true, "", 0};
    int pairs = 0, terms = 0, odd = 0, forced_nonzero = 0;
    for (int q1 = 3; q1 <= 15; q1 += 2)
        for (int q2 = 3; q2 <= 15; q2 += 2) {
            ++pairs;
            for (const auto& t : boundary_triple_terms(q1, q2)) {
                ++terms;
                if (t.value % 2 != 0) ++odd;
                if (t.identity_forced && t.value != 0) ++forced_nonzero;
            }
        }
    r.passed = odd == 0 && forced_nonzero == 0;
    std::ostringstream os;
    os << pairs << " pairs, " << terms << " terms, " << odd << " odd, " << forced_nonzero << " forced terms nonzero";
    r.detail = os.str();
    return r;
}

CriterionResult klassen_arcs(const AcceptanceOptions& o) {
    CriterionResult r{10, "Klassen arcs satisfy the relation, stay inside their meridian window, end at bifurcations",
                      true, "", 0};
    int samples = 0, bad = 0;
    double worst_endpoint = 0;
    for (int q : {3, 5, 7})
        for (int k = 1; k <= q - 2; k += 2) {
            const double lo = k / (4.0 * q), hi = (2.0 * q - k) / (4.0 * q);
            for (int i = 0; i < kArcSamples; ++i) {
                const double s = (i + 0.5) / kArcSamples;
                const auto rep = klassen_rep(q, k, s);
                const double u = meridian_angle(q, k, s);
                ++samples;
                if (rep.relation_residual() > o.tol_mat || !(u > lo && u < hi)) ++bad;
            }
            const double a = meridian_angle(q, k, 0.0), b = meridian_angle(q, k, 1.0);
            const double err = std::min(std::max(std::fabs(a - lo), std::fabs(b - hi)),
                                        std::max(std::fabs(a - hi), std::fabs(b - lo)));
            worst_endpoint = std::max(worst_endpoint, err);
        }
    r.passed = bad == 0 && worst_endpoint <= kEndpointTol;
    std::ostringstream os;
    os << samples << " samples, " << bad << " failing; endpoint error " << format_double(worst_endpoint);
    r.detail = os.str();
    return r;
}

CriterionResult mobius_identification(const AcceptanceOptions&) {
    CriterionResult r{11, "twisting by pi matches the reflected arc parameter", true, "", 0};
    int samples = 0;
    double worst = 0;
    for (int q : {3, 5, 7})
        for (int k = 1; k <= q - 2; k += 2)
            for (int i = 0; i < kMobiusSamples; ++i) {
                const double s = (i + 0.5) / kMobiusSamples;
                const auto twisted = twist_left(kPi, klassen_rep(q, k, s));
                const auto plain = twist_left(0.0, klassen_rep(q, k, 1.0 - s));
                const auto a = pair_invariants(twisted.image_x(), twisted.image_y());
                const auto b = pair_invariants(plain.image_x(), plain.image_y());
                worst = std::max(worst, a.distance(b));
                ++samples;
            }
    r.passed = worst <= kInvariantTol;
    std::ostringstream os;
    os << samples << " samples, largest invariant gap " << format_double(worst);
    r.detail = os.str();
    return r;
}

CriterionResult solid_torus_loops(const AcceptanceOptions&) {
    CriterionResult r{12, "solid-torus spectral flow equals 4*wind on normal-form loops", true, "", 0};
    const auto on12 = HolonomyParam::make({0.5, -0.5, 0}, {0.5, -0.5, 0});
    const auto on23 = HolonomyParam::make({0, 0.5, -0.5}, {0, 0.5, -0.5});
    const auto trivial = HolonomyParam::make({0, 0, 0}, {0, 0, 0});
    const auto generic = HolonomyParam::make({0.3, -0.1, -0.2}, {0.15, 0.05, -0.2});
    int loops = 0, bad = 0;
    for (int w = -2; w <= 2; ++w) {
        const std::vector<BlowupLoop> variants{
            {rotation_segment(on12, 0, 1, w)},
            {rotation_segment(on12, 0, 1, w + 1), free_segment(generic, 0, 1, 2.5), rotation_segment(on23, 1, 2, -1)},
            // rotations over a base off the (0,2) lattice do not count
            {rotation_segment(on12, 0, 2, 3), rotation_segment(trivial, 0, 2, w)},
        };
        for (const auto& loop : variants) {
            ++loops;
            if (winding_number(loop) != w || sf_solid_torus(loop) != 4 * w) ++bad;
        }
    }
    r.passed = bad == 0;
    r.detail = std::to_string(loops) + " loops, " + std::to_string(bad) + " mismatches";
    return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
    static const std::vector<std::function<CriterionResult(const AcceptanceOptions&)>> table{
        isolated_count,  casson_formula,    intersection_counts, catalog_validity,
        cohomology_tables, harmonic_dimensions, limit_convergence, maslov_identities,
        splice_parity,   klassen_arcs,    mobius_identification, solid_torus_loops};
    if (id < 1 || id > kCriterionCount) throw ValidationError("no such criterion");
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = table[static_cast<std::size_t>(id - 1)](opts);
    } catch (const std::exception& ex) {
        r.id = id;
        r.title = "criterion " + std::to_string(id);
        r.passed = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = seconds_since(t0);
    return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
    return out;
}

std::string format_report(const std::vector<CriterionResult>& results, const AcceptanceOptions& opts) {
    std::ostringstream os;
    os << "# casson selfcheck version=0.1.0 seed=" << opts.seed << " tol_rank=" << format_double(opts.tol_rank)
       << " tol_mat=" << format_double(opts.tol_mat) << "\n";
    int passed = 0;
    for (const auto& r : results) {
        passed += r.passed;
        os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail << "\n";
    }
    os << "# " << passed << "/" << results.size() << " criteria passed\n";
    return os.str();
}

}  // namespace casson::cli
