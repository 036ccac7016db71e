#include <doctest.h>

#include <numbers>

#include <Eigen/Eigenvalues>

#include "casson/torusop.hpp"

using namespace casson;

namespace {

constexpr double kPi = std::numbers::pi;

HolonomyParam trivial3() { return HolonomyParam::make({0, 0, 0}, {0, 0, 0}); }
HolonomyParam single3() { return HolonomyParam::make({0.5, -0.5, 0}, {0.5, -0.5, 0}); }
HolonomyParam generic3() { return HolonomyParam::make({0.3, -0.1, -0.2}, {0.15, 0.05, -0.2}); }

}  // namespace

TEST_CASE("parameters must sum to zero") {
    CHECK_THROWS_AS(HolonomyParam::make({0.1, 0.1}, {0, 0}), ValidationError);
    CHECK_THROWS_AS(HolonomyParam::make({0.1}, {0.1}), ValidationError);
    const auto p = single3();
    CHECK(p.alpha_ij(0, 1) == doctest::Approx(1.0));
    CHECK(std::abs(p.holonomy_m()(0, 0) + 1.0) < 1e-15);
}

TEST_CASE("lattice channels") {
    CHECK(lattice_channels(trivial3()).size() == 3);
    CHECK(lattice_channels(generic3()).empty());
    const auto single = lattice_channels(single3());
    REQUIRE(single.size() == 1);
    CHECK(single[0] == ChannelPair{0, 1});
    CHECK(pair_index(3, 0, 1) == 0);
    CHECK(pair_index(3, 0, 2) == 1);
    CHECK(pair_index(3, 1, 2) == 2);
    CHECK(pair_index(4, 2, 3) == 5);
}

TEST_CASE("symbol blocks are hermitian with eigenvalues ±2π|ξ| twice") {
    for (auto [m, l] : std::vector<std::pair<double, double>>{{1, 0}, {0.3, -1.7}, {-2, 2}, {0, 0}}) {
        const auto b = symbol_block(m, l);
        CHECK((b - b.adjoint()).norm() < 1e-15);
        const auto ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(b).eigenvalues();
        const double r = 2 * kPi * std::hypot(m, l);
        CHECK(ev(0) == doctest::Approx(-r).epsilon(1e-12));
        CHECK(ev(1) == doctest::Approx(-r).epsilon(1e-12));
        CHECK(ev(2) == doctest::Approx(r).epsilon(1e-12));
        CHECK(ev(3) == doctest::Approx(r).epsilon(1e-12));
    }
}

TEST_CASE("harmonic dimensions equal zero counts for every cutoff") {
    for (const auto& [p, want] : std::vector<std::pair<HolonomyParam, int>>{{trivial3(), 32}, {generic3(), 8}, {single3(), 16}})
        for (int nmax : {1, 3, 8}) {
            CHECK(harmonic_dims(p, 3) == want);
            CHECK(zero_eigenvalue_count(truncated_spectrum(p, 3, nmax)) == want);
        }
    const auto su2 = HolonomyParam::make({0.25, -0.25}, {0.5, -0.5});
    CHECK(harmonic_dims(su2, 2) == 4);
    CHECK(zero_eigenvalue_count(truncated_spectrum(su2, 2, 4)) == 4);
}

TEST_CASE("K spaces are the signed eigenvectors of the symbol in direction θ") {
    for (double phi : {0.0, 0.7, 2.0, -2.6}) {
        const cplx th = std::polar(1.0, phi);
        BlowupParam bp{single3(), {th, cplx(1), cplx(1)}};
        const auto b = symbol_block(th.real(), th.imag());
        const Mat kp = k_limit_space(bp, +1, 0, 1), km = k_limit_space(bp, -1, 0, 1);
        CHECK((b * kp - 2 * kPi * kp).norm() < 1e-12);
        CHECK((b * km + 2 * kPi * km).norm() < 1e-12);
        CHECK((kp.adjoint() * km).norm() < 1e-12);
        // reversing θ swaps the two spaces
        BlowupParam opposite{single3(), {-th, cplx(1), cplx(1)}};
        CHECK(complex_principal_angle(k_limit_space(opposite, +1, 0, 1), km) < 1e-12);
    }
    BlowupParam off{generic3(), {cplx(1), cplx(1), cplx(1)}};
    CHECK_THROWS_AS(k_limit_space(off, +1, 0, 1), ValidationError);
}

TEST_CASE("distinct directions give distinct limits") {
    BlowupParam a{trivial3(), {cplx(1), cplx(1), cplx(1)}};
    BlowupParam b{trivial3(), {cplx(0, 1), cplx(1), cplx(1)}};
    CHECK(complex_principal_angle(k_limit_space(a, 1, 0, 1), k_limit_space(b, 1, 0, 1)) > 0.1);
    CHECK_FALSE(a.equivalent(b));
}

TEST_CASE("blow-up points compare θ only on lattice channels") {
    BlowupParam a{single3(), {cplx(1), cplx(1), cplx(1)}};
    BlowupParam b{single3(), {cplx(1), cplx(0, 1), cplx(-1)}};
    CHECK(a.equivalent(b));
    b.theta[0] = cplx(0, 1);
    CHECK_FALSE(a.equivalent(b));
}

TEST_CASE("small eigenspaces converge to the positive limit") {
    for (cplx d : {cplx(1, 0), cplx(0, -1), cplx(-2, 1)}) {
        const auto r = limit_convergence_check(single3(), 0, 1, d);
        CHECK(r.passes());
        CHECK(r.angles.size() == 3);
    }
    CHECK_THROWS_AS(limit_convergence_check(generic3(), 0, 1, cplx(1)), ValidationError);
}

TEST_CASE("off-diagonal channels carry complex structure") {
    CHECK(complex_channel_multiplicities_even(generic3(), 3));
    CHECK(complex_channel_multiplicities_even(single3(), 3));
}

TEST_CASE("winding numbers of normal-form loops") {
    BlowupLoop loop{rotation_segment(trivial3(), 0, 1, 2), rotation_segment(trivial3(), 1, 2, -3),
                    free_segment(generic3(), 0, 1, 1.0)};
    CHECK(winding_number(loop) == -1);
    CHECK(sf_solid_torus(loop) == -4);
    CHECK_THROWS_AS(free_segment(trivial3(), 0, 1, 1.0), ValidationError);
    LoopSegment open{trivial3(), {{{0, 1}, {cplx(1), cplx(0, 1)}}}};
    CHECK_THROWS_AS(winding_number({open}), ValidationError);
}
