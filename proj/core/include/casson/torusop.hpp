#pragma once

#include <utility>
#include <vector>

#include "casson/liealg.hpp"

namespace casson {

using ChannelPair = std::pair<int, int>;  // 0-based i < j

/// Holonomy parameters (α, β) ∈ Λ² of the flat connection −i diag(α) dm − i diag(β) dℓ.
struct HolonomyParam {
    RVec alpha;
    RVec beta;

    static HolonomyParam make(const std::vector<double>& alpha, const std::vector<double>& beta);
    int n() const { return static_cast<int>(alpha.size()); }
    double alpha_ij(int i, int j) const { return alpha(i) - alpha(j); }
    double beta_ij(int i, int j) const { return beta(i) - beta(j); }
    Mat holonomy_m() const;
    Mat holonomy_l() const;
};

/// A point of the blown-up parameter space: θ_ij ∈ S¹ for every i < j.
struct BlowupParam {
    HolonomyParam base;
    std::vector<cplx> theta;  // lexicographic over i < j, unit modulus

    cplx theta_ij(int i, int j) const;
    /// θ's are compared only on channels where the base is integral.
    bool equivalent(const BlowupParam& other, double tol = 1e-12) const;
};

std::size_t pair_index(int n, int i, int j);
bool is_lattice_channel(const HolonomyParam& p, int i, int j, double tol = 1e-12);
std::vector<ChannelPair> lattice_channels(const HolonomyParam& p, double tol = 1e-12);

/// Real dimension of ker S: 4(n−1) + 8·#lattice channels.
int harmonic_dims(const HolonomyParam& p, int n);

/// Channel i == j marks the k-th diagonal (U_n) direction; i < j the complex line C^{ij}.
struct Channel {
    int i = 0, j = 0;
    bool diagonal() const { return i == j; }
};

/// Tangential operator restricted to one Fourier mode of one channel, acting on (f, g₁, g₂, h)
/// for f + g₁ dm + g₂ dℓ + h dm∧dℓ.
struct FourierModeBlock {
    Channel channel;
    int m = 0, l = 0;
    Eigen::Matrix4cd block;
    Eigen::Vector4d eigenvalues;  // ascending
    int real_weight = 2;          // real dimension carried by each complex eigenvector
};

/// Block at shifted frequency ξ; its eigenvalues are ±2π|ξ|, each twice.
Eigen::Matrix4cd symbol_block(double xi_m, double xi_l);

/// Every channel and every mode |m|, |ℓ| ≤ nmax, in deterministic order.
std::vector<FourierModeBlock> truncated_spectrum(const HolonomyParam& p, int n, int nmax);
/// Real count of eigenvalues with |λ| ≤ tol.
int zero_eigenvalue_count(const std::vector<FourierModeBlock>& blocks, double tol = 1e-9);

/// Columns ψ₁^±, ψ₂^± in (f, g₁, g₂, h) coordinates of the kernel mode of channel (i, j).
Mat k_limit_space(const BlowupParam& bp, int sign, int i, int j);

/// Largest principal angle between the column spans of two complex matrices.
double complex_principal_angle(const Mat& a, const Mat& b);

struct ConvergenceReport {
    cplx theta;
    std::vector<double> t;
    std::vector<double> angles;  // radians
    bool monotone = false;
    bool passes(double final_tol = 1e-3) const { return monotone && !angles.empty() && angles.back() < final_tol; }
};

/// Approaches p0 along α_ij + iβ_ij = t·direction + t²·bend and compares the positive
/// small-eigenvalue space of channel (i, j) with K^{ij+}(direction).
ConvergenceReport limit_convergence_check(const HolonomyParam& p0, int i, int j, cplx direction,
                                          const std::vector<double>& ts = {1e-2, 1e-3, 1e-4},
                                          cplx bend = cplx(0.7, -0.4), int nmax = 2);

/// Realified off-diagonal blocks have every eigenvalue with even real multiplicity.
bool complex_channel_multiplicities_even(const HolonomyParam& p, int nmax);

/// One piece of a normal-form loop: fixed base, sampled θ_ij circles per channel.
struct LoopSegment {
    HolonomyParam base;
    std::vector<std::pair<ChannelPair, std::vector<cplx>>> theta_paths;
};

using BlowupLoop = std::vector<LoopSegment>;

/// A segment rotating θ_ij through `turns` full turns at a fixed base.
LoopSegment rotation_segment(const HolonomyParam& base, int i, int j, int turns, int samples = 64);
/// A segment at a base off the lattice for (i, j); θ there is immaterial.
LoopSegment free_segment(const HolonomyParam& base, int i, int j, double phase_span);

int winding_number(const BlowupLoop& loop);
int sf_solid_torus(const BlowupLoop& loop);

}  // namespace casson
