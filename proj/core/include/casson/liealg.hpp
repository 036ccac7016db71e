#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace casson {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Absolute tolerance for unitarity, skew-hermitian and residual checks.
inline constexpr double kTolMat = 1e-10;
/// Tolerance for comparing eigenvalue angles (in units of full turns).
inline constexpr double kTolAngle = 1e-8;
/// Relative singular-value threshold used for every rank computation.
inline constexpr double kTolRank = 1e-8;
/// Singular values at or below this absolute floor are zero whatever the relative test says.
inline constexpr double kRankFloor = 1e-12;

class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class GroupTag { SU2, SU3, U2, SU2xU1_embed, U1xSU2_embed };

const char* to_string(GroupTag tag);

/// A unitary n×n matrix (n ≤ 3) checked on construction.
class UnitaryMatrix {
public:
    UnitaryMatrix() = default;
    UnitaryMatrix(Mat m, GroupTag tag, double tol = kTolMat);

    const Mat& mat() const { return m_; }
    GroupTag tag() const { return tag_; }
    int n() const { return static_cast<int>(m_.rows()); }

    UnitaryMatrix inverse() const;
    UnitaryMatrix operator*(const UnitaryMatrix& other) const;

private:
    Mat m_;
    GroupTag tag_ = GroupTag::U2;
};

/// Skew-hermitian matrix viewed in u(n), split into diagonal (U_n) and off-diagonal (W_n) parts.
class LieAlgebraVector {
public:
    LieAlgebraVector() = default;
    explicit LieAlgebraVector(Mat m, double tol = kTolMat);

    const Mat& mat() const { return m_; }
    int n() const { return static_cast<int>(m_.rows()); }
    Mat diagonal_part() const;
    Mat off_diagonal_part() const;
    bool is_traceless(double tol = kTolMat) const;

private:
    Mat m_;
};

struct EigenAngleVector {
    std::vector<double> angles;  // sorted, each in [0,1)

    bool approx_equal(const EigenAngleVector& other, double tol = kTolAngle) const;
};

/// Eigenvalue angles e^{2πi·angle}, sorted ascending in [0,1).
EigenAngleVector eig_angles(const UnitaryMatrix& u);
EigenAngleVector eig_angles(const Mat& u);

/// Real dimension of the commutant of `set` inside u(n).
int commutant_dim(std::span<const Mat> set, double rank_tol = kTolRank);
int commutant_dim(std::initializer_list<Mat> set, double rank_tol = kTolRank);

LieAlgebraVector adjoint(const UnitaryMatrix& g, const LieAlgebraVector& x);

/// Real basis of u(n) (n² elements) ordered diagonal first, then (Re, Im) pairs per i<j.
std::vector<Mat> u_basis(int n);
/// Coordinates of a skew-hermitian matrix with respect to u_basis(n).
RVec u_coords(const Mat& x);
Mat u_from_coords(const RVec& c, int n);

/// Singular values ≤ max(rel_tol·σ_max, kRankFloor) count as zero.
inline double rank_cutoff(double sigma_max, double rel_tol) {
    return rel_tol * sigma_max > kRankFloor ? rel_tol * sigma_max : kRankFloor;
}

/// Numerical rank under rank_cutoff.
int numeric_rank(const RMat& a, double rel_tol = kTolRank);
/// Orthonormal basis of the null space, same threshold as numeric_rank.
RMat null_space(const RMat& a, double rel_tol = kTolRank);

/// Nearest unitary matrix (polar factor).
Mat reunitarize(const Mat& m);
/// m^k for k ∈ ℤ with polar correction every 8 multiplications.
Mat unitary_power(const Mat& m, long k);

/// SU(2) matrix of the quaternion a + b·j, i.e. [[a, b], [−b̄, ā]].
Mat su2_from_quaternion(cplx a, cplx b);

Mat block_diag(const Mat& a, const Mat& b);
double unitarity_residual(const Mat& m);
bool is_scalar(const Mat& m, double tol = kTolMat);

}  // namespace casson
