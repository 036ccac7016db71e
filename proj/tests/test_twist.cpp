#include <doctest.h>

#include <numbers>
#include <random>

#include "casson/maslov.hpp"
#include "casson/twist.hpp"

using namespace casson;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("twisted representations are S(U(2)xU(1)) solutions") {
    for (double theta : {0.0, 0.4, kPi, 2.5}) {
        const auto t = twist_left(theta, klassen_rep(5, 1, 0.3));
        CHECK(t.relation_residual() < 1e-12);
        for (const Mat& m : {t.image_x(), t.image_y()}) {
            CHECK(std::abs(m.determinant() - 1.0) < 1e-12);
            CHECK(std::abs(m(0, 2)) + std::abs(m(1, 2)) + std::abs(m(2, 0)) + std::abs(m(2, 1)) < 1e-15);
        }
        const auto r = twist_right(theta, klassen_rep(5, 1, 0.3));
        CHECK(r.relation_residual() < 1e-12);
        CHECK(std::abs(r.image_x()(0, 1)) + std::abs(r.image_x()(0, 2)) < 1e-15);
    }
}

TEST_CASE("the twist depends on the character only through its meridian image") {
    const auto base = klassen_rep(7, 5, 0.62);
    const auto a = twist_left(0.9, base);
    const auto b = twist_left(0.9 + 2 * kPi, base);
    CHECK((a.image_x() - b.image_x()).norm() < 1e-12);
    CHECK((a.image_y() - b.image_y()).norm() < 1e-12);
}

TEST_CASE("pair invariants are conjugation invariant") {
    std::mt19937_64 rng(2);
    const Mat a = haar_unitary(3, rng), b = haar_unitary(3, rng), g = haar_unitary(3, rng);
    const auto i0 = pair_invariants(a, b);
    const auto i1 = pair_invariants(g * a * g.adjoint(), g * b * g.adjoint());
    CHECK(i0.distance(i1) < 1e-12);
    CHECK(i0.distance(pair_invariants(b, a)) > 1e-3);
}

TEST_CASE("Mobius chart glues the two seams") {
    for (double s : {0.1, 0.5, 0.77}) {
        const auto a = mobius_chart(5, 3, s, 0.0);
        const auto b = mobius_chart(5, 3, 1.0 - s, kPi);
        CHECK(a.s == doctest::Approx(b.s));
        CHECK(a.theta == doctest::Approx(b.theta));
    }
    CHECK(mobius_chart(5, 3, 0.25, 1.0).s == 0.25);
    CHECK_THROWS_AS(mobius_chart(5, 3, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(mobius_chart(5, 3, 0.5, 4.0), ValidationError);
}

TEST_CASE("one Mobius band per arc") {
    for (int q : {3, 5, 7, 9, 11}) CHECK(mobius_band_count(q) == (q - 1) / 2);
    CHECK_THROWS_AS(mobius_band_count(4), ValidationError);
}
