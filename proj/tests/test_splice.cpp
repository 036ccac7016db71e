#include <doctest.h>

#include <set>

#include "casson/splice.hpp"

using namespace casson;

TEST_CASE("rationals serialize as num/den") {
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-6, 8)) == "-3/4");
    CHECK(to_string(Rational(2)) == "2/1");
    CHECK(parse_rational("5/12") == Rational(5, 12));
    CHECK(parse_rational(to_string(Rational(-7, 30))) == Rational(-7, 30));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("intersection counts agree with a finer lattice") {
    for (int q1 : {3, 5, 7})
        for (int q2 : {3, 5})
            for (int k1 = 1; k1 <= q1 - 2; k1 += 2)
                for (int k2 = 1; k2 <= q2 - 2; k2 += 2) {
                    const long want = long(q1 - k1) * (q2 - k2);
                    CHECK(static_cast<long>(intersection_points(q1, k1, q2, k2).size()) == want);
                    CHECK(lattice_intersection_count(q1, k1, q2, k2, 2) == want);
                }
}

TEST_CASE("intersection points are distinct and lie in the open square") {
    const auto pts = intersection_points(5, 1, 7, 3);
    std::set<std::pair<Rational, Rational>> seen;
    for (const auto& p : pts) {
        CHECK(p.theta1 > 0);
        CHECK(p.theta1 < 1);
        CHECK(p.theta2 > 0);
        CHECK(p.theta2 < 1);
        seen.emplace(p.theta1, p.theta2);
    }
    CHECK(seen.size() == pts.size());
}

TEST_CASE("arc intersection totals") {
    CHECK(arc_intersection_total(3, 3) == 4);
    CHECK(arc_intersection_total(3, 5) == 12);
    CHECK(arc_intersection_total(5, 5) == 36);
    for (int q1 = 3; q1 <= 11; q1 += 2)
        for (int q2 = 3; q2 <= 11; q2 += 2)
            CHECK(arc_intersection_total(q1, q2) == (long(q1) * q1 - 1) * (long(q2) * q2 - 1) / 16);
}

TEST_CASE("Casson invariants of torus knots and their splices") {
    CHECK(casson_su2_knot(3) == 1);
    CHECK(casson_su2_knot(5) == 3);
    CHECK(casson_su2_knot(7) == 6);
    CHECK(casson_su3_spliced(3, 3) == 16);
    CHECK(casson_su3_spliced(3, 5) == 48);
    CHECK(casson_su3_spliced(5, 5) == 144);
    CHECK(casson_su3_spliced(3, 7) == 96);
    CHECK(casson_su3_spliced(5, 7) == 288);
    CHECK_THROWS_AS(casson_su3_spliced(3, 4), ValidationError);
}

TEST_CASE("q must be odd and at least 3") {
    CHECK_THROWS_AS(validate_q(1), ValidationError);
    CHECK_THROWS_AS(validate_q(4), ValidationError);
    CHECK_NOTHROW(validate_q(9));
}

TEST_CASE("glued representations from the catalog") {
    const auto res = enumerate_isolated(3, 5);
    CHECK(res.point_count == static_cast<std::size_t>(arc_intersection_total(3, 5)));
    for (const auto& rep : res.catalog) {
        const auto v = validate_isolated(rep);
        CHECK(v.passes());
        CHECK(v.commutant == 1);
        CHECK(rep.gluing == GluingParameter{0, 0});
    }
}

// Only the identity gluing matches the boundary restrictions, so each intersection point contributes
// one class; the three nontrivial gluings miss by a residual of order one.
TEST_CASE("enumeration yields one class per intersection point") {
    for (auto [q1, q2] : std::vector<std::pair<int, int>>{{3, 3}, {3, 5}, {5, 5}}) {
        const auto res = enumerate_isolated(q1, q2);
        CHECK(static_cast<long>(res.distinct_classes) == arc_intersection_total(q1, q2));
        CHECK(res.rejected.size() == 3 * res.point_count);
        for (const auto& r : res.rejected) CHECK(r.boundary_residual > 1.0);
    }
}

TEST_CASE("enumeration is independent of the thread count") {
    const auto a = enumerate_isolated(5, 7, 1);
    const auto b = enumerate_isolated(5, 7, 4);
    REQUIRE(a.catalog.size() == b.catalog.size());
    for (std::size_t i = 0; i < a.catalog.size(); ++i)
        for (std::size_t g = 0; g < 4; ++g) CHECK((a.catalog[i].images[g] - b.catalog[i].images[g]).norm() == 0);
}

TEST_CASE("trace signatures separate conjugacy classes") {
    const auto res = enumerate_isolated(3, 3);
    CHECK(count_distinct_classes(res.catalog) == res.catalog.size());
    std::vector<IsolatedRep> doubled = res.catalog;
    doubled.insert(doubled.end(), res.catalog.begin(), res.catalog.end());
    CHECK(count_distinct_classes(doubled) == res.catalog.size());
}

TEST_CASE("component classification") {
    using R = RestrictionType;
    CHECK(classify_component(2, R::reducible_nonabelian, R::reducible_nonabelian) == ComponentType::isolated_point);
    CHECK(classify_component(2, R::reducible_nonabelian, R::reducible_nonabelian, true) ==
          ComponentType::reducible_circle);
    CHECK(classify_component(2, R::irreducible, R::irreducible) == ComponentType::torus_mod_center);
    CHECK(classify_component(2, R::irreducible, R::reducible_nonabelian) == ComponentType::torus_mod_u1);
    CHECK(classify_component(4, R::irreducible, R::irreducible) == ComponentType::su2xu1_mod_center);
    CHECK(component_euler_characteristic(ComponentType::isolated_point) == 1);
    CHECK(component_euler_characteristic(ComponentType::torus_mod_center) == 0);
    CHECK_THROWS_AS(classify_component(2, R::abelian, R::irreducible), ValidationError);
}
