#include "casson/torusop.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace casson {

namespace {

constexpr double kPi = std::numbers::pi;

bool near_integer(double v, double tol) { return std::fabs(v - std::round(v)) <= tol; }

Mat orthonormal_columns(const Mat& a) {
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    int r = 0;
    while (r < sv.size() && sv(r) > rank_cutoff(sv(0), kTolRank)) ++r;
    return svd.matrixU().leftCols(r);
}

FourierModeBlock make_block(Channel ch, int m, int l, double xi_m, double xi_l, int weight) {
    FourierModeBlock b;
    b.channel = ch;
    b.m = m;
    b.l = l;
    b.block = symbol_block(xi_m, xi_l);
    b.eigenvalues = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(b.block, Eigen::EigenvaluesOnly).eigenvalues();
    b.real_weight = weight;
    return b;
}

}  // namespace

HolonomyParam HolonomyParam::make(const std::vector<double>& alpha, const std::vector<double>& beta) {
    if (alpha.size() != beta.size() || alpha.size() < 2) throw ValidationError("α and β need equal length n ≥ 2");
    HolonomyParam p;
    p.alpha = Eigen::Map<const RVec>(alpha.data(), static_cast<Eigen::Index>(alpha.size()));
    p.beta = Eigen::Map<const RVec>(beta.data(), static_cast<Eigen::Index>(beta.size()));
    if (std::fabs(p.alpha.sum()) > 1e-14 || std::fabs(p.beta.sum()) > 1e-14)
        throw ValidationError("holonomy parameters must sum to zero");
    return p;
}

Mat HolonomyParam::holonomy_m() const {
    Mat d = Mat::Zero(n(), n());
    for (int k = 0; k < n(); ++k) d(k, k) = std::polar(1.0, 2 * kPi * alpha(k));
    return d;
}

Mat HolonomyParam::holonomy_l() const {
    Mat d = Mat::Zero(n(), n());
    for (int k = 0; k < n(); ++k) d(k, k) = std::polar(1.0, 2 * kPi * beta(k));
    return d;
}

std::size_t pair_index(int n, int i, int j) {
    if (!(0 <= i && i < j && j < n)) throw ValidationError("channel needs 0 ≤ i < j < n");
    std::size_t idx = 0;
    for (int a = 0; a < i; ++a) idx += static_cast<std::size_t>(n - 1 - a);
    return idx + static_cast<std::size_t>(j - i - 1);
}

cplx BlowupParam::theta_ij(int i, int j) const { return theta.at(pair_index(base.n(), i, j)); }

bool BlowupParam::equivalent(const BlowupParam& other, double tol) const {
    if (base.n() != other.base.n()) return false;
    if ((base.alpha - other.base.alpha).norm() > tol || (base.beta - other.base.beta).norm() > tol) return false;
    for (const auto& [i, j] : lattice_channels(base))
        if (std::abs(theta_ij(i, j) - other.theta_ij(i, j)) > tol) return false;
    return true;
}

bool is_lattice_channel(const HolonomyParam& p, int i, int j, double tol) {
    return near_integer(p.alpha_ij(i, j), tol) && near_integer(p.beta_ij(i, j), tol);
}

std::vector<ChannelPair> lattice_channels(const HolonomyParam& p, double tol) {
    std::vector<ChannelPair> out;
    for (int i = 0; i < p.n(); ++i)
        for (int j = i + 1; j < p.n(); ++j)
            if (is_lattice_channel(p, i, j, tol)) out.emplace_back(i, j);
    return out;
}

int harmonic_dims(const HolonomyParam& p, int n) {
    if (p.n() != n) throw ValidationError("holonomy parameter has the wrong rank");
    return 4 * (n - 1) + 8 * static_cast<int>(lattice_channels(p).size());
}

Eigen::Matrix4cd symbol_block(double xi_m, double xi_l) {
    // d acts on a mode by −2πiξ; rows give *d g, −*d f − d*h, d*g
    const cplx dm(0, -2 * kPi * xi_m);
    const cplx dl(0, -2 * kPi * xi_l);
    Eigen::Matrix4cd b = Eigen::Matrix4cd::Zero();
    b(0, 1) = -dl;
    b(0, 2) = dm;
    b(1, 0) = dl;
    b(1, 3) = -dm;
    b(2, 0) = -dm;
    b(2, 3) = -dl;
    b(3, 1) = dm;
    b(3, 2) = dl;
    return b;
}

std::vector<FourierModeBlock> truncated_spectrum(const HolonomyParam& p, int n, int nmax) {
    if (p.n() != n) throw ValidationError("holonomy parameter has the wrong rank");
    if (nmax < 1) throw ValidationError("N_max must be at least 1");
    std::vector<FourierModeBlock> out;
    // real coefficients: mode (m, ℓ) pairs with (−m, −ℓ), so keep a half-plane
    for (int k = 0; k + 1 < n; ++k)
        for (int m = 0; m <= nmax; ++m)
            for (int l = -nmax; l <= nmax; ++l) {
                if (m == 0 && l < 0) continue;
                out.push_back(make_block({k, k}, m, l, m, l, (m == 0 && l == 0) ? 1 : 2));
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int m = -nmax; m <= nmax; ++m)
                for (int l = -nmax; l <= nmax; ++l)
                    out.push_back(make_block({i, j}, m, l, p.alpha_ij(i, j) + m, p.beta_ij(i, j) + l, 2));
    return out;
}

int zero_eigenvalue_count(const std::vector<FourierModeBlock>& blocks, double tol) {
    int count = 0;
    for (const auto& b : blocks)
        for (int k = 0; k < 4; ++k)
            if (std::fabs(b.eigenvalues(k)) <= tol) count += b.real_weight;
    return count;
}

Mat k_limit_space(const BlowupParam& bp, int sign, int i, int j) {
    if (sign != 1 && sign != -1) throw ValidationError("sign must be ±1");
    if (!is_lattice_channel(bp.base, i, j)) throw ValidationError("K-space is zero off the lattice set");
    const cplx th = bp.theta_ij(i, j);
    const cplx I(0, 1);
    const double s = sign;
    Mat k(4, 2);
    k.col(0) << 1.0, -s * I * th.imag(), s * I * th.real(), 0.0;
    k.col(1) << 0.0, s * I * th.real(), s * I * th.imag(), 1.0;
    return k;
}

double complex_principal_angle(const Mat& a, const Mat& b) {
    const Mat qa = orthonormal_columns(a);
    const Mat qb = orthonormal_columns(b);
    if (qa.cols() != qb.cols()) return kPi / 2;
    Eigen::JacobiSVD<Mat> svd(qb - qa * (qa.adjoint() * qb));
    return std::asin(std::clamp(svd.singularValues()(0), 0.0, 1.0));
}

ConvergenceReport limit_convergence_check(const HolonomyParam& p0, int i, int j, cplx direction,
                                          const std::vector<double>& ts, cplx bend, int nmax) {
    if (!is_lattice_channel(p0, i, j)) throw ValidationError("limit check needs a lattice point of the channel");
    if (std::abs(direction) == 0.0) throw ValidationError("direction must be nonzero");
    ConvergenceReport r;
    r.theta = direction / std::abs(direction);
    BlowupParam bp{p0, std::vector<cplx>(static_cast<std::size_t>(p0.n() * (p0.n() - 1) / 2), cplx(1))};
    bp.theta[pair_index(p0.n(), i, j)] = r.theta;
    const Mat target = k_limit_space(bp, +1, i, j);
    const int m0 = -static_cast<int>(std::lround(p0.alpha_ij(i, j)));
    const int l0 = -static_cast<int>(std::lround(p0.beta_ij(i, j)));

    for (double t : ts) {
        const cplx delta = t * r.theta + t * t * bend;
        Mat small(4, 0);
        bool stray = false;
        for (int m = -nmax; m <= nmax; ++m)
            for (int l = -nmax; l <= nmax; ++l) {
                const auto blk = symbol_block(p0.alpha_ij(i, j) + delta.real() + m, p0.beta_ij(i, j) + delta.imag() + l);
                Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(blk);
                for (int k = 0; k < 4; ++k) {
                    const double ev = es.eigenvalues()(k);
                    if (ev <= 0 || ev >= 1.0) continue;
                    if (m != m0 || l != l0) stray = true;
                    small.conservativeResize(4, small.cols() + 1);
                    small.col(small.cols() - 1) = es.eigenvectors().col(k);
                }
            }
        r.t.push_back(t);
        r.angles.push_back(stray || small.cols() != 2 ? kPi / 2 : complex_principal_angle(small, target));
    }
    r.monotone = true;
    for (std::size_t k = 1; k < r.angles.size(); ++k)
        if (!(r.angles[k] < r.angles[k - 1])) r.monotone = false;
    return r;
}

bool complex_channel_multiplicities_even(const HolonomyParam& p, int nmax) {
    for (const auto& b : truncated_spectrum(p, p.n(), nmax)) {
        if (b.channel.diagonal()) continue;
        Eigen::Matrix<double, 8, 8> real;
        real << b.block.real(), -b.block.imag(), b.block.imag(), b.block.real();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 8, 8>> es(real, Eigen::EigenvaluesOnly);
        const auto& ev = es.eigenvalues();
        for (int k = 0; k < 8; k += 2)
            if (std::fabs(ev(k) - ev(k + 1)) > 1e-9) return false;
    }
    return true;
}

LoopSegment rotation_segment(const HolonomyParam& base, int i, int j, int turns, int samples) {
    samples = std::max(samples, 8 * std::abs(turns) + 8);
    std::vector<cplx> path;
    for (int k = 0; k <= samples; ++k)
        path.push_back(std::polar(1.0, 2 * kPi * turns * static_cast<double>(k) / samples));
    path.back() = path.front();
    return {base, {{{i, j}, std::move(path)}}};
}

LoopSegment free_segment(const HolonomyParam& base, int i, int j, double phase_span) {
    if (is_lattice_channel(base, i, j)) throw ValidationError("free segment must stay off the lattice set");
    std::vector<cplx> path;
    for (int k = 0; k <= 32; ++k) path.push_back(std::polar(1.0, phase_span * k / 32.0));
    return {base, {{{i, j}, std::move(path)}}};
}

int winding_number(const BlowupLoop& loop) {
    int wind = 0;
    for (const auto& seg : loop)
        for (const auto& [ch, path] : seg.theta_paths) {
            if (!is_lattice_channel(seg.base, ch.first, ch.second)) continue;
            if (path.size() < 2 || std::abs(path.front() - path.back()) > 1e-9)
                throw ValidationError("θ path at a lattice base must be closed");
            double total = 0;
            for (std::size_t k = 1; k < path.size(); ++k) total += std::arg(path[k] / path[k - 1]);
            wind += static_cast<int>(std::lround(total / (2 * kPi)));
        }
    return wind;
}

int sf_solid_torus(const BlowupLoop& loop) { return 4 * winding_number(loop); }

}  // namespace casson
