#include <doctest.h>

#include <numbers>
#include <random>

#include "casson/cohomology.hpp"
#include "casson/maslov.hpp"

using namespace casson;

namespace {

constexpr RepCase kCases[] = {RepCase::central, RepCase::abelian_generic, RepCase::bifurcation, RepCase::irreducible};

// Cocycles computed straight from the relator x^p y^{-q} with Fox derivatives.
int h1_from_relator(const KnotGroupRep& rep) {
    const auto& pres = rep.presentation();
    const Word relator{{0, pres.p}, {1, -pres.q}};
    const std::vector<Mat> images{rep.image_x().mat(), rep.image_y().mat()};
    const int z1 = 8 - numeric_rank(fox_matrix(relator, images));
    const int b1 = 4 - commutant_dim({images[0], images[1]});
    return z1 - b1;
}

}  // namespace

TEST_CASE("expected dimension table") {
    CHECK(expected_dims(RepCase::central, 2, 3) == CohomologyDims{RepCase::central, 2, 3, 4, 4, 0});
    CHECK(expected_dims(RepCase::abelian_generic, 2, 5) == CohomologyDims{RepCase::abelian_generic, 2, 5, 2, 2, 0});
    CHECK(expected_dims(RepCase::bifurcation, 2, 7) == CohomologyDims{RepCase::bifurcation, 2, 7, 2, 4, 2});
    CHECK(expected_dims(RepCase::irreducible, 2, 3) == CohomologyDims{RepCase::irreducible, 2, 3, 1, 2, 0});
}

TEST_CASE("samples land in their case and reproduce the table") {
    std::mt19937_64 rng(123);
    for (RepCase c : kCases)
        for (int q : {3, 5, 7, 9})
            for (int i = 0; i < 10; ++i) {
                const auto rep = sample_rep(c, q, rng);
                CHECK(rep.relation_residual() < 1e-10);
                CHECK(classify_case(rep) == c);
                CHECK(cohomology_dims(rep) == expected_dims(c, 2, q));
            }
}

TEST_CASE("h0 is the commutant and h1 matches a direct Fox computation") {
    std::mt19937_64 rng(77);
    for (RepCase c : kCases)
        for (int i = 0; i < 10; ++i) {
            const auto rep = sample_rep(c, 5, rng);
            CHECK(h0_dim(rep) == commutant_dim({rep.image_x().mat(), rep.image_y().mat()}));
            CHECK(h1_dim(rep) == h1_from_relator(rep));
        }
}

TEST_CASE("cocycle basis vectors satisfy the relation") {
    std::mt19937_64 rng(4);
    const auto rep = sample_rep(RepCase::bifurcation, 3, rng);
    const RMat z = cocycle_basis(rep);
    const Word relator{{0, 2}, {1, -3}};
    const RMat f = fox_matrix(relator, {rep.image_x().mat(), rep.image_y().mat()});
    CHECK((f * z).norm() < 1e-9);
}

TEST_CASE("Ad preserves the trace form on u(2)") {
    std::mt19937_64 rng(8);
    const RMat a = ad_matrix(haar_unitary(2, rng));
    const auto basis = u_basis(2);
    RMat gram(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) gram(i, j) = (basis[i].adjoint() * basis[j]).trace().real();
    CHECK((a.transpose() * gram * a - gram).norm() < 1e-12);
}

TEST_CASE("torus cohomology") {
    const double pi = std::numbers::pi;
    Mat mu = Mat::Identity(2, 2), la = Mat::Identity(2, 2);
    CHECK(torus_h_dims(mu, la) == std::pair{4, 8});
    mu(0, 0) = std::polar(1.0, 0.4 * pi);
    mu(1, 1) = std::conj(mu(0, 0));
    CHECK(torus_h_dims(mu, la) == std::pair{2, 4});
}

TEST_CASE("limiting values are Lagrangian") {
    std::mt19937_64 rng(31);
    for (RepCase c : kCases)
        for (int i = 0; i < 5; ++i) {
            const auto lv = limiting_values(sample_rep(c, 5, rng));
            CHECK(lv.rep_case == c);
            CHECK(2 * lv.dim() == lv.ambient_dim());
            const ModelSpace model(lv.coeff_dim);
            const RMat omega = lv.basis.transpose() * model.symplectic().J() * lv.basis;
            CHECK(omega.norm() < 1e-9);
            CHECK(numeric_rank(lv.basis) == lv.dim());
        }
}

TEST_CASE("solid torus limiting values need diagonal holonomy") {
    RVec a(3), b(3);
    a << 0.2, -0.1, -0.1;
    b << 1.2, -1.1, -0.1;
    const auto lv = solid_torus_limiting_values(3, a, b, false);
    CHECK(2 * lv.dim() == lv.ambient_dim());
    b << 0.3, -0.1, -0.2;
    CHECK_THROWS_AS(solid_torus_limiting_values(3, a, b, false), ValidationError);
}
