#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "casson/maslov.hpp"

using namespace casson;

namespace {

constexpr double kPi = std::numbers::pi;

Lagrangian line(const SymplecticSpace& sp, double a) {
    RMat v(2, 1);
    v << std::cos(a), std::sin(a);
    return Lagrangian(sp, v);
}

LagrangianPath rotating_line(const SymplecticSpace& sp, double from, double to) {
    return [=](double t) { return line(sp, from + t * (to - from)).frame(sp); };
}

bool is_lagrangian(const SymplecticSpace& sp, const RMat& b) {
    return b.cols() == sp.half_dim() && (b.transpose() * sp.J() * b).norm() < 1e-10;
}

}  // namespace

TEST_CASE("standard complex structure") {
    const auto sp = SymplecticSpace::standard(3);
    CHECK((sp.J() * sp.J() + RMat::Identity(6, 6)).norm() == 0);
    std::mt19937_64 rng(1);
    const auto l = random_lagrangian(sp, rng);
    CHECK(is_lagrangian(sp, l.basis()));
    CHECK(is_lagrangian(sp, apply_J(sp, l).basis()));
    CHECK(intersection_dim(l, apply_J(sp, l)) == 0);
    CHECK(intersection_dim(l, l) == 3);
    const auto back = lagrangian_from_frame(sp, l.frame(sp));
    CHECK(max_principal_angle(back.basis(), l.basis()) < 1e-10);
}

TEST_CASE("non-Lagrangian spans are rejected") {
    const auto sp = SymplecticSpace::standard(1);
    CHECK_THROWS_AS(Lagrangian(sp, RMat::Identity(2, 2)), ValidationError);
}

TEST_CASE("rotating a line") {
    const auto sp = SymplecticSpace::standard(1);
    const auto fixed = constant_path(sp, line(sp, 0.3));
    // half a turn returns to the same line and crosses every other line once
    CHECK(std::abs(maslov_index(rotating_line(sp, 0, kPi), fixed)) == 1);
    CHECK(maslov_index(rotating_line(sp, 0, 2 * kPi), fixed) == 2);
    CHECK(maslov_index(rotating_line(sp, 0, -2 * kPi), fixed) == -2);
    CHECK(maslov_index(rotating_line(sp, 0, 0.2), fixed) == 0);
}

TEST_CASE("Maslov index is additive and flips under reversal") {
    std::mt19937_64 rng(42);
    for (int n : {1, 2, 3})
        for (int k = 0; k < 20; ++k) {
            const auto sp = SymplecticSpace::standard(n);
            std::vector<Lagrangian> a, b;
            for (int i = 0; i < 3; ++i) {
                a.push_back(random_lagrangian(sp, rng));
                b.push_back(random_lagrangian(sp, rng));
            }
            const auto a1 = geodesic_path(sp, a[0], a[1]), a2 = geodesic_path(sp, a[1], a[2]);
            const auto b1 = geodesic_path(sp, b[0], b[1]), b2 = geodesic_path(sp, b[1], b[2]);
            const int m1 = maslov_index(a1, b1), m2 = maslov_index(a2, b2);
            CHECK(maslov_index(concatenate(a1, a2), concatenate(b1, b2)) == m1 + m2);
            CHECK(maslov_index(reverse(a1), reverse(b1)) == -m1);
        }
}

TEST_CASE("a degenerate endpoint needs regularization") {
    const auto sp = SymplecticSpace::standard(1);
    const auto fixed = constant_path(sp, line(sp, 0));
    CHECK_THROWS_AS(maslov_index(rotating_line(sp, 0, 1), fixed, false), ValidationError);
    CHECK_NOTHROW(maslov_index(rotating_line(sp, 0, 1), fixed, true));
}

TEST_CASE("triple index identities") {
    std::mt19937_64 rng(99);
    for (int n : {1, 2, 3})
        for (int k = 0; k < 30; ++k) {
            const auto sp = SymplecticSpace::standard(n);
            const auto l1 = random_lagrangian(sp, rng);
            const auto l2 = k % 2 ? random_lagrangian_containing(sp, (sp.J() * l1.basis()).leftCols(1), rng)
                                  : random_lagrangian(sp, rng);
            const auto l3 = random_lagrangian(sp, rng);
            CHECK(triple_index(sp, l1, l1, l2) == 0);
            CHECK(triple_index(sp, l1, l2, l2) == 0);
            CHECK(triple_index(sp, l1, l2, l1) == intersection_dim(apply_J(sp, l1), l2));
            CHECK(triple_index(sp, l1, l2, l3) ==
                  intersection_dim(apply_J(sp, l2), l3) - triple_index(sp, l1, l3, l2));
        }
}

TEST_CASE("triple index does not depend on the base") {
    std::mt19937_64 rng(5);
    const auto sp = SymplecticSpace::standard(2);
    for (int k = 0; k < 20; ++k) {
        const auto l1 = random_lagrangian(sp, rng), l2 = random_lagrangian(sp, rng), l3 = random_lagrangian(sp, rng);
        const auto base = random_lagrangian(sp, rng);
        CHECK(triple_index(sp, l1, l2, l3) == triple_index(sp, l1, l2, l3, base));
    }
}

TEST_CASE("model space complex structure") {
    const ModelSpace model(2);
    CHECK(model.dim() == 8);
    const RMat c = RMat::Identity(2, 2);
    const RMat dm = model.tensor(c, {.dm = 1}), dl = model.tensor(c, {.dl = 1});
    const RMat one = model.tensor(c, {.one = 1}), vol = model.tensor(c, {.dmdl = 1});
    const RMat& j = model.symplectic().J();
    CHECK((j * dm - dl).norm() < 1e-15);
    CHECK((j * dl + dm).norm() < 1e-15);
    CHECK((j * one - vol).norm() < 1e-15);
    CHECK((j * vol + one).norm() < 1e-15);
    CHECK(ModelSpace(3, FormBlock::even).dim() == 6);
}

TEST_CASE("the two boundary Lagrangians are J-related and transverse") {
    const ModelSpace model(3);
    const auto& sp = model.symplectic();
    const auto lm = l_hat_minus(model), lp = l_hat_plus(model);
    CHECK(is_lagrangian(sp, lm.basis));
    CHECK(is_lagrangian(sp, lp.basis));
    CHECK(max_principal_angle(sp.J() * lm.basis, lp.basis) < 1e-12);
    CHECK(intersection_dim(Lagrangian(sp, lm.basis), Lagrangian(sp, lp.basis)) == 0);
}

TEST_CASE("boundary triple terms for the (3,3) splice") {
    const auto terms = boundary_triple_terms(3, 3);
    REQUIRE_FALSE(terms.empty());
    int irreducible_end = 0;
    for (const auto& t : terms) {
        CHECK(t.value % 2 == 0);
        if (t.identity_forced) CHECK(t.value == 0);
        if (t.group == "su(3) irreducible end" && !t.identity_forced) {
            ++irreducible_end;
            CHECK(t.value == -2);
        }
    }
    CHECK(irreducible_end == 1);
    CHECK(parity_assembly(3, 3).consistent());
    CHECK(parity_assembly(5, 7).consistent());
}
