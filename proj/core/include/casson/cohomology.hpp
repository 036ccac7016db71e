#pragma once

#include <random>
#include <string>
#include <utility>

#include "casson/knotrep.hpp"

namespace casson {

enum class RepCase { central, abelian_generic, bifurcation, irreducible };

const char* to_string(RepCase c);

/// Cochains of a two-generator group with u(2) coefficients.
struct CochainSpace {
    int degree = 0;
    int real_dim() const { return degree == 0 ? 4 : 8; }
};

/// Ad_g on u(n) in the coordinates of u_basis(n).
RMat ad_matrix(const Mat& g);

/// Case read off from commutants; throws ValidationError when a singular value sits near the threshold.
RepCase classify_case(const KnotGroupRep& rep, double rank_tol = kTolRank);

int h0_dim(const KnotGroupRep& rep, double rank_tol = kTolRank);
int h1_dim(const KnotGroupRep& rep, double rank_tol = kTolRank);
/// Basis (8 × dim Z¹) of 1-cocycles (ζ(x), ζ(y)).
RMat cocycle_basis(const KnotGroupRep& rep, double rank_tol = kTolRank);
/// Evaluates a cocycle on a word: 4 × 8 matrix taking (ζ(x), ζ(y)) to ζ(w).
RMat fox_matrix(const Word& w, const std::vector<Mat>& images);

/// (h0, h1) of the torus with commuting holonomies μ, λ.
std::pair<int, int> torus_h_dims(const Mat& mu, const Mat& lambda, double rank_tol = kTolRank);

/// Dimension of the kernel of H¹(X; u(2)) → H¹(T; u(2)).
int restriction_kernel_dim(const KnotGroupRep& rep, double rank_tol = kTolRank);

struct CohomologyDims {
    RepCase rep_case = RepCase::central;
    int p = 2, q = 3;
    int h0 = 0, h1 = 0, w_a = 0;
    bool operator==(const CohomologyDims&) const = default;
};

CohomologyDims cohomology_dims(const KnotGroupRep& rep, double rank_tol = kTolRank);
/// Integers the computation must reproduce in each case.
CohomologyDims expected_dims(RepCase c, int p, int q);

/// Subspace of C ⊗ span{1, dm, dℓ, dm∧dℓ}, stored in ModelSpace(coeff_dim) coordinates.
struct LimitingValues {
    RepCase rep_case = RepCase::central;
    int coeff_dim = 2;
    RMat basis;
    std::string description;
    int dim() const { return static_cast<int>(basis.cols()); }
    int ambient_dim() const { return 4 * coeff_dim; }
};

/// Coefficients (U₁, U₂) for non-central reps, (U₁, U₂, Q_re, Q_im) for central ones.
LimitingValues limiting_values(const KnotGroupRep& rep, double rank_tol = kTolRank);
/// Solid torus with diagonal boundary holonomy (α ≡ β mod ℤⁿ), su(n) coefficients.
LimitingValues solid_torus_limiting_values(int n, const RVec& alpha, const RVec& beta, bool central);

/// Random representation of the given case over U(2), conjugated by a Haar-random unitary.
KnotGroupRep sample_rep(RepCase c, int q, std::mt19937_64& rng);

}  // namespace casson
