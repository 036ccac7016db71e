#include <doctest.h>

#include <numbers>
#include <random>

#include "casson/liealg.hpp"
#include "casson/maslov.hpp"

using namespace casson;

namespace {

Mat diag2(double a, double b) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = std::polar(1.0, 2 * std::numbers::pi * a);
    m(1, 1) = std::polar(1.0, 2 * std::numbers::pi * b);
    return m;
}

Mat random_skew(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = cplx(g(rng), g(rng));
    return a - a.adjoint();
}

}  // namespace

TEST_CASE("unitary matrices are validated on construction") {
    CHECK_NOTHROW(UnitaryMatrix(diag2(0.1, -0.1), GroupTag::SU2));
    Mat bad = Mat::Identity(2, 2) * 1.01;
    CHECK_THROWS_AS(UnitaryMatrix(bad, GroupTag::U2), ValidationError);
    CHECK_THROWS_AS(UnitaryMatrix(diag2(0.1, 0.2), GroupTag::SU2), ValidationError);
}

TEST_CASE("eigen angles are sorted in [0,1)") {
    const auto e = eig_angles(diag2(0.7, -0.7));
    REQUIRE(e.angles.size() == 2);
    CHECK(e.angles[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(e.angles[1] == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(e.approx_equal(eig_angles(diag2(0.3, 0.7))));
}

TEST_CASE("commutant dimensions in u(2) and u(3)") {
    CHECK(commutant_dim({Mat(Mat::Identity(2, 2))}) == 4);
    CHECK(commutant_dim({diag2(0.1, -0.1)}) == 2);
    const Mat j = su2_from_quaternion(0, 1);
    CHECK(commutant_dim({diag2(0.1, -0.1), j}) == 1);
    // block(A, 1) with A irreducible pair in SU(2): commutant is the 2-torus of scalars per block
    CHECK(commutant_dim({block_diag(diag2(0.1, -0.1), Mat::Identity(1, 1)), block_diag(j, Mat::Identity(1, 1))}) ==
          2);
}

TEST_CASE("u(n) coordinates round-trip") {
    std::mt19937_64 rng(7);
    for (int n : {1, 2, 3}) {
        CHECK(u_basis(n).size() == static_cast<std::size_t>(n * n));
        for (int k = 0; k < 20; ++k) {
            const Mat x = random_skew(n, rng);
            CHECK((u_from_coords(u_coords(x), n) - x).norm() < 1e-12);
        }
    }
}

TEST_CASE("adjoint action preserves the norm") {
    std::mt19937_64 rng(11);
    Mat u = haar_unitary(3, rng);
    u /= std::pow(u.determinant(), 1.0 / 3);
    const UnitaryMatrix g(u, GroupTag::SU3, 1e-9);
    const LieAlgebraVector x(random_skew(3, rng));
    CHECK(adjoint(g, x).mat().norm() == doctest::Approx(x.mat().norm()).epsilon(1e-12));
}

TEST_CASE("numeric rank uses an absolute floor") {
    RMat tiny = RMat::Constant(3, 3, 1e-15);
    CHECK(numeric_rank(tiny) == 0);
    CHECK(null_space(tiny).cols() == 3);
    RMat a = RMat::Zero(3, 3);
    a(0, 0) = 1;
    a(1, 1) = 1e-9;  // below 1e-8 relative
    CHECK(numeric_rank(a) == 1);
    CHECK(numeric_rank(a, 1e-10) == 2);
}

TEST_CASE("integer powers agree with repeated products") {
    std::mt19937_64 rng(3);
    const Mat u = haar_unitary(2, rng);
    Mat p = Mat::Identity(2, 2);
    for (int k = 0; k < 13; ++k) p = p * u;
    CHECK((unitary_power(u, 13) - p).norm() < 1e-12);
    CHECK((unitary_power(u, -13) * p - Mat::Identity(2, 2)).norm() < 1e-12);
    CHECK((unitary_power(u, 0) - Mat::Identity(2, 2)).norm() == 0);
}

TEST_CASE("quaternion matrices lie in SU(2)") {
    const cplx a(0.6, 0.0), b(0.0, 0.8);
    const Mat m = su2_from_quaternion(a, b);
    CHECK(unitarity_residual(m) < 1e-15);
    CHECK(std::abs(m.determinant() - 1.0) < 1e-15);
    CHECK(is_scalar(-Mat::Identity(3, 3)));
    CHECK_FALSE(is_scalar(m));
}

TEST_CASE("splitting u(n) into diagonal and off-diagonal parts") {
    std::mt19937_64 rng(5);
    const LieAlgebraVector x(random_skew(3, rng));
    CHECK((x.diagonal_part() + x.off_diagonal_part() - x.mat()).norm() < 1e-15);
    CHECK(x.off_diagonal_part().diagonal().norm() == 0);
    CHECK_THROWS_AS(LieAlgebraVector(Mat::Identity(2, 2)), ValidationError);
}
