#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "casson/knotrep.hpp"
#include "casson/maslov.hpp"

using namespace casson;

TEST_CASE("word algebra") {
    const Word w{{0, 2}, {1, -3}};
    CHECK(word_inverse(word_inverse(w)).size() == w.size());
    std::mt19937_64 rng(1);
    const std::vector<Mat> imgs{haar_unitary(2, rng), haar_unitary(2, rng)};
    const Mat id = evaluate(word_concat(w, word_inverse(w)), imgs);
    CHECK((id - Mat::Identity(2, 2)).norm() < 1e-12);
    CHECK((evaluate(word_power(w, 3), imgs) - evaluate(w, imgs) * evaluate(w, imgs) * evaluate(w, imgs)).norm() <
          1e-12);
    CHECK(to_string(w, {"x", "y"}) == "x^2y^-3");
}

TEST_CASE("meridian has degree one and the longitude degree zero") {
    for (int q : {3, 5, 7, 9}) {
        const auto p = TorusKnotPresentation::make(2, q);
        CHECK(p.degree(p.meridian) == 1);
        CHECK(p.degree(p.longitude) == 0);
    }
}

TEST_CASE("Klassen arcs are irreducible solutions of the relation") {
    for (int q : {3, 5, 7})
        for (int k = 1; k <= q - 2; k += 2)
            for (double s : {0.05, 0.5, 0.93}) {
                const auto rep = klassen_rep(q, k, s);
                CHECK(rep.relation_residual() < 1e-12);
                CHECK(is_irreducible(rep));
                // trace of the meridian image determines u
                const double u = meridian_angle(q, k, s);
                CHECK(rep.meridian_image().trace().real() ==
                      doctest::Approx(2 * std::cos(2 * std::numbers::pi * u)).epsilon(1e-12));
                // the longitude of an irreducible rep commutes with the meridian
                const Mat m = rep.meridian_image(), l = rep.longitude_image();
                CHECK((m * l - l * m).norm() < 1e-11);
            }
}

TEST_CASE("arc endpoints are the bifurcation points") {
    CHECK(meridian_angle(3, 1, 0.0) == doctest::Approx(1.0 / 12).epsilon(1e-14));
    CHECK(meridian_angle(3, 1, 1.0) == doctest::Approx(5.0 / 12).epsilon(1e-14));
    const auto e0 = meridian_angle(5, 3, 0.0), e1 = meridian_angle(5, 3, 1.0);
    CHECK(std::min(e0, e1) == doctest::Approx(3.0 / 20).epsilon(1e-14));
    CHECK(std::max(e0, e1) == doctest::Approx(7.0 / 20).epsilon(1e-14));
}

TEST_CASE("abelian representations are reducible") {
    const auto rep = abelian_rep(5, 0.17);
    CHECK(rep.relation_residual() < 1e-12);
    CHECK_FALSE(is_irreducible(rep));
}

TEST_CASE("conjugation preserves relations and traces") {
    std::mt19937_64 rng(9);
    const auto rep = klassen_rep(7, 3, 0.4);
    const auto c = conjugate(rep, haar_unitary(2, rng));
    CHECK(c.relation_residual() < 1e-12);
    CHECK(std::abs(c.meridian_image().trace() - rep.meridian_image().trace()) < 1e-12);
    CHECK(boundary_pillowcase(c).u == doctest::Approx(boundary_pillowcase(rep).u).epsilon(1e-10));
}

TEST_CASE("pillowcase canonical form") {
    const auto p = canonical_pillowcase(0.7, 0.2);
    CHECK(p.u == doctest::Approx(0.3));
    CHECK(p.v == doctest::Approx(0.8));
    const auto r = canonical_pillowcase(1.2, -0.1);
    CHECK(r.u == doctest::Approx(0.2));
    CHECK(r.v == doctest::Approx(0.9));
}

TEST_CASE("invalid arc arguments are rejected") {
    CHECK_THROWS_AS(klassen_rep(4, 1, 0.5), ValidationError);
    CHECK_THROWS_AS(klassen_rep(5, 2, 0.5), ValidationError);
    CHECK_THROWS_AS(klassen_rep(5, 5, 0.5), ValidationError);
    CHECK_THROWS_AS(klassen_rep(5, 1, 1.5), ValidationError);
}
