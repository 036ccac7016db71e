#pragma once

#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "casson/liealg.hpp"

namespace casson {

/// ℝ^{2N} with an orthogonal complex structure J and ω(u,v) = ⟨Ju, v⟩.
class SymplecticSpace {
public:
    explicit SymplecticSpace(RMat j, double tol = kTolMat);
    /// J(e_k) = e_{N+k} on ℝ^{2N}.
    static SymplecticSpace standard(int n);

    int dim() const { return static_cast<int>(j_.rows()); }
    int half_dim() const { return dim() / 2; }
    const RMat& J() const { return j_; }
    double omega(const RVec& u, const RVec& v) const { return (j_ * u).dot(v); }

    /// Complex coordinates in which J acts as multiplication by i.
    Mat to_complex(const RMat& vectors) const;
    RMat to_real(const Mat& coords) const;

private:
    RMat j_;
    RMat frame_;  // columns e_k with {e_k, J e_k} orthonormal
};

/// Lagrangian subspace stored as an orthonormal basis (2N × N).
class Lagrangian {
public:
    Lagrangian(const SymplecticSpace& space, const RMat& spanning, double tol = 1e-9);

    const RMat& basis() const { return basis_; }
    /// Unitary N×N frame of the basis in complex coordinates.
    Mat frame(const SymplecticSpace& space) const { return space.to_complex(basis_); }

private:
    RMat basis_;
};

Lagrangian apply_J(const SymplecticSpace& space, const Lagrangian& l);
Lagrangian lagrangian_from_frame(const SymplecticSpace& space, const Mat& unitary_frame);
int intersection_dim(const Lagrangian& a, const Lagrangian& b, double tol = 1e-8);
/// Largest principal angle between equal-dimension subspaces.
double max_principal_angle(const RMat& a, const RMat& b);

/// t ↦ unitary frame of a Lagrangian, t ∈ [0,1].
using LagrangianPath = std::function<Mat(double)>;

LagrangianPath constant_path(const SymplecticSpace& space, const Lagrangian& l);
/// exp(t·log(Z₁Z₀*))·Z₀ with the principal logarithm.
LagrangianPath geodesic_path(const SymplecticSpace& space, const Lagrangian& from, const Lagrangian& to);
LagrangianPath piecewise_geodesic(const SymplecticSpace& space, const std::vector<Lagrangian>& waypoints);
LagrangianPath concatenate(const LagrangianPath& a, const LagrangianPath& b);
LagrangianPath reverse(const LagrangianPath& a);
LagrangianPath j_path(const LagrangianPath& a);

/// Regularization angle: the first Lagrangian is rotated by e^{εJ} at crossings.
inline constexpr double kMaslovEpsilon = 1e-6;

/// Signed count of crossings of the pair (A(t), B(t)); eigenvalue 1 at an endpoint counts as e^{i0⁺}.
int maslov_index(const LagrangianPath& a, const LagrangianPath& b, bool regularize = true);

/// Triple index through geodesics from the coincident triple (base, base, base).
int triple_index(const SymplecticSpace& space, const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);
int triple_index(const SymplecticSpace& space, const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                 const Lagrangian& base);
/// Same, along caller-supplied paths that start at a common Lagrangian.
int triple_index_along(const LagrangianPath& p1, const LagrangianPath& p2, const LagrangianPath& p3);

Mat haar_unitary(int n, std::mt19937_64& rng);
Lagrangian random_lagrangian(const SymplecticSpace& space, std::mt19937_64& rng);
/// Random Lagrangian containing the given orthonormal isotropic vectors.
Lagrangian random_lagrangian_containing(const SymplecticSpace& space, const RMat& isotropic, std::mt19937_64& rng);

/// Coefficients of a form in the basis (1, dm, dℓ, dm∧dℓ).
struct FormVec {
    double one = 0, dm = 0, dl = 0, dmdl = 0;
};

enum class FormBlock { all, even, odd };  // even = span{1, dm∧dℓ}, odd = span{dm, dℓ}

/// C ⊗ forms on the torus, C a real coefficient space with orthonormal basis.
/// J: 1 ↦ dm∧dℓ ↦ −1 and dm ↦ dℓ ↦ −dm.
class ModelSpace {
public:
    ModelSpace(int coeff_dim, FormBlock block = FormBlock::all);

    int coeff_dim() const { return coeff_dim_; }
    int dim() const { return coeff_dim_ * static_cast<int>(forms_.size()); }
    const SymplecticSpace& symplectic() const { return space_; }
    /// Columns c ⊗ f for every column c of coeff_basis.
    RMat tensor(const RMat& coeff_basis, const FormVec& f) const;

private:
    int coeff_dim_;
    std::vector<int> forms_;  // indices into (1, dm, dℓ, dm∧dℓ)
    SymplecticSpace space_;
};

/// A subspace assembled from pieces c ⊗ f, keeping a readable tag.
struct NamedSubspace {
    std::string tag;
    RMat basis;
};

NamedSubspace named_span(const ModelSpace& model, const std::vector<std::pair<RMat, FormVec>>& pieces,
                         std::string tag);
/// L̂⁻ = U ⊕ U dℓ and L̂⁺ = J L̂⁻ for the full coefficient space.
NamedSubspace l_hat_minus(const ModelSpace& model);
NamedSubspace l_hat_plus(const ModelSpace& model);

struct TripleTerm {
    std::string group;        // which boundary comparison the term belongs to
    std::string expression;   // e.g. τ(U(dm+6dℓ), U dm, U(dm+dℓ))
    int value = 0;
    bool identity_forced = false;  // repeated entry, so the triple identities force 0
};

/// Every diagonal-coefficient triple term of the mod-2 comparison for the (2,q₁), (2,q₂) splice.
std::vector<TripleTerm> boundary_triple_terms(int q1, int q2);

struct ParityReport {
    int q1 = 3, q2 = 3;
    std::vector<TripleTerm> terms;
    bool all_even = false;
    bool forced_terms_zero = false;
    bool complex_flow_even = false;       // off-diagonal blocks are ℂ-linear
    bool u2_irreducible_kernel_constant = false;
    int triple_parity = 0;                // Σ terms mod 2
    bool consistent() const;
};

ParityReport parity_assembly(int q1, int q2);

}  // namespace casson
