#include "casson/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace casson {

namespace {

bool is_su(GroupTag tag) { return tag != GroupTag::U2; }

double circular_distance(double a, double b) {
    double d = std::fabs(a - b);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

}  // namespace

const char* to_string(GroupTag tag) {
    switch (tag) {
        case GroupTag::SU2: return "SU2";
        case GroupTag::SU3: return "SU3";
        case GroupTag::U2: return "U2";
        case GroupTag::SU2xU1_embed: return "SU2xU1_embed";
        case GroupTag::U1xSU2_embed: return "U1xSU2_embed";
    }
    return "?";
}

UnitaryMatrix::UnitaryMatrix(Mat m, GroupTag tag, double tol) : m_(std::move(m)), tag_(tag) {
    if (m_.rows() != m_.cols() || m_.rows() < 1 || m_.rows() > 3)
        throw ValidationError("unitary matrix must be square of size 1..3");
    const int expect = (tag == GroupTag::SU2 || tag == GroupTag::U2) ? 2 : 3;
    if (m_.rows() != expect) throw ValidationError(std::string("wrong size for group ") + to_string(tag));
    if (unitarity_residual(m_) > tol) throw ValidationError("matrix is not unitary within tolerance");
    if (is_su(tag) && std::abs(m_.determinant() - cplx(1.0)) > tol)
        throw ValidationError("determinant differs from 1");
}

UnitaryMatrix UnitaryMatrix::inverse() const {
    UnitaryMatrix out;
    out.m_ = m_.adjoint();
    out.tag_ = tag_;
    return out;
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& other) const {
    if (n() != other.n()) throw ValidationError("size mismatch in product");
    UnitaryMatrix out;
    out.m_ = m_ * other.m_;
    out.tag_ = tag_ == other.tag_ ? tag_ : (n() == 3 ? GroupTag::SU3 : GroupTag::U2);
    return out;
}

LieAlgebraVector::LieAlgebraVector(Mat m, double tol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw ValidationError("Lie algebra element must be square");
    if ((m_ + m_.adjoint()).norm() > tol) throw ValidationError("matrix is not skew-hermitian");
}

Mat LieAlgebraVector::diagonal_part() const {
    Mat d = Mat::Zero(m_.rows(), m_.cols());
    d.diagonal() = m_.diagonal();
    return d;
}

Mat LieAlgebraVector::off_diagonal_part() const { return m_ - diagonal_part(); }

bool LieAlgebraVector::is_traceless(double tol) const { return std::abs(m_.trace()) <= tol; }

bool EigenAngleVector::approx_equal(const EigenAngleVector& other, double tol) const {
    if (angles.size() != other.angles.size()) return false;
    // multiset match on the circle; n ≤ 3 so greedy is exact enough
    std::vector<bool> used(other.angles.size(), false);
    for (double a : angles) {
        bool found = false;
        for (std::size_t j = 0; j < other.angles.size(); ++j) {
            if (!used[j] && circular_distance(a, other.angles[j]) <= tol) {
                used[j] = found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

EigenAngleVector eig_angles(const Mat& u) {
    if (u.rows() != u.cols() || unitarity_residual(u) > kTolMat)
        throw ValidationError("eig_angles: input is not unitary");
    Eigen::ComplexEigenSolver<Mat> es(u, false);
    EigenAngleVector out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double a = std::arg(es.eigenvalues()[i]) / (2.0 * std::numbers::pi);
        if (a < 0) a += 1.0;
        if (a >= 1.0 - 1e-12) a = 0.0;
        out.angles.push_back(a);
    }
    std::sort(out.angles.begin(), out.angles.end());
    return out;
}

EigenAngleVector eig_angles(const UnitaryMatrix& u) { return eig_angles(u.mat()); }

std::vector<Mat> u_basis(int n) {
    std::vector<Mat> basis;
    const cplx I(0, 1);
    for (int i = 0; i < n; ++i) {
        Mat e = Mat::Zero(n, n);
        e(i, i) = I;
        basis.push_back(e);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat re = Mat::Zero(n, n);
            re(i, j) = 1.0;
            re(j, i) = -1.0;
            Mat im = Mat::Zero(n, n);
            im(i, j) = I;
            im(j, i) = I;
            basis.push_back(re);
            basis.push_back(im);
        }
    return basis;
}

RVec u_coords(const Mat& x) {
    const int n = static_cast<int>(x.rows());
    RVec c(n * n);
    int k = 0;
    for (int i = 0; i < n; ++i) c(k++) = x(i, i).imag();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            c(k++) = x(i, j).real();
            c(k++) = x(i, j).imag();
        }
    return c;
}

Mat u_from_coords(const RVec& c, int n) {
    const auto basis = u_basis(n);
    Mat x = Mat::Zero(n, n);
    for (int k = 0; k < n * n; ++k) x += c(k) * basis[k];
    return x;
}

int numeric_rank(const RMat& a, double rel_tol) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<RMat> svd(a);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 0;
    const double cut = rank_cutoff(s(0), rel_tol);
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cut) ++r;
    return r;
}

RMat null_space(const RMat& a, double rel_tol) {
    const Eigen::Index cols = a.cols();
    if (a.rows() == 0) return RMat::Identity(cols, cols);
    Eigen::JacobiSVD<RMat> svd(a, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    int r = 0;
    if (s.size() > 0)
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (s(i) > rank_cutoff(s(0), rel_tol)) ++r;
    return svd.matrixV().rightCols(cols - r);
}

int commutant_dim(std::span<const Mat> set, double rank_tol) {
    if (set.empty()) throw ValidationError("commutant_dim: empty set");
    const int n = static_cast<int>(set.front().rows());
    for (const auto& a : set)
        if (a.rows() != n || a.cols() != n) throw ValidationError("commutant_dim: mixed sizes");
    const auto basis = u_basis(n);
    // columns: basis elements; rows: real and imaginary parts of every commutator entry
    RMat sys(2 * n * n * static_cast<int>(set.size()), n * n);
    for (int b = 0; b < n * n; ++b) {
        int row = 0;
        for (const auto& a : set) {
            Mat c = basis[b] * a - a * basis[b];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    sys(row++, b) = c(i, j).real();
                    sys(row++, b) = c(i, j).imag();
                }
        }
    }
    return n * n - numeric_rank(sys, rank_tol);
}

int commutant_dim(std::initializer_list<Mat> set, double rank_tol) {
    std::vector<Mat> v(set);
    return commutant_dim(std::span<const Mat>(v), rank_tol);
}

LieAlgebraVector adjoint(const UnitaryMatrix& g, const LieAlgebraVector& x) {
    if (g.n() != x.n()) throw ValidationError("adjoint: size mismatch");
    return LieAlgebraVector(g.mat() * x.mat() * g.mat().adjoint());
}

Mat reunitarize(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

Mat unitary_power(const Mat& m, long k) {
    const Mat base = k < 0 ? Mat(m.adjoint()) : m;
    const long e = k < 0 ? -k : k;
    Mat acc = Mat::Identity(m.rows(), m.cols());
    for (long i = 1; i <= e; ++i) {
        acc = acc * base;
        if (i % 8 == 0) acc = reunitarize(acc);
    }
    return acc;
}

Mat su2_from_quaternion(cplx a, cplx b) {
    Mat m(2, 2);
    m << a, b, -std::conj(b), std::conj(a);
    return m;
}

Mat block_diag(const Mat& a, const Mat& b) {
    Mat m = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
}

double unitarity_residual(const Mat& m) {
    return (m * m.adjoint() - Mat::Identity(m.rows(), m.cols())).norm();
}

bool is_scalar(const Mat& m, double tol) {
    return (m - m(0, 0) * Mat::Identity(m.rows(), m.cols())).norm() <= tol;
}

}  // namespace casson
