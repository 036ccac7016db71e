#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "casson/twist.hpp"

namespace casson {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

/// π₁ of the spliced sum; generators are indexed x1=0, y1=1, x2=2, y2=3.
struct SplicedSumPresentation {
    int q1 = 3;
    int q2 = 3;
    Word mu1, lambda1, mu2, lambda2;

    static SplicedSumPresentation make(int q1, int q2);
    static const std::vector<std::string>& generator_names();
};

/// A line on the torus [0,1)²; parameters are angles in units of π.
struct TorusLineSegment {
    Rational slope;
    Rational start;
    Rational end;
    int wraps;  // vertical wraps for γ₁, horizontal for γ₂
};

TorusLineSegment gamma1_segment(int q1, int k1);
TorusLineSegment gamma2_segment(int q2, int k2);

/// Intersection of γ₁ and γ₂, recorded as θ₁/π and θ₂/π.
struct IntersectionPoint {
    Rational theta1;
    Rational theta2;
};

std::vector<IntersectionPoint> intersection_points(int q1, int k1, int q2, int k2);
/// Brute-force count: rasterize both curves on an N×N grid, N = 2(q₁q₂−1)·multiplier.
long lattice_intersection_count(int q1, int k1, int q2, int k2, int multiplier = 1);

struct GluingParameter {
    int e1 = 0;
    int e2 = 0;
    bool operator==(const GluingParameter&) const = default;
};

inline const std::array<GluingParameter, 4> kAllGluings{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};

/// Conjugating elements of the discrete gluing parameters.
Mat gluing_matrix_a1();
Mat gluing_matrix_a2();

class AssemblyError : public std::runtime_error {
public:
    AssemblyError(const std::string& what, double residual) : std::runtime_error(what), residual(residual) {}
    double residual;
};

struct IsolatedRep {
    int q1 = 3, q2 = 3, k1 = 1, k2 = 1;
    Rational theta1, theta2;
    double s1 = 0, s2 = 0;
    GluingParameter gluing;
    std::array<Mat, 4> images;  // x1, y1, x2, y2

    std::vector<Mat> image_list() const { return {images.begin(), images.end()}; }
    /// Largest residual of x1²=y1^q1 and x2²=y2^q2.
    double relation_residual() const;
    /// Largest residual of μ1=λ2 and λ1=μ2.
    double boundary_residual() const;
};

/// Words whose traces serve as conjugacy invariants of glued representations.
const std::vector<std::pair<std::string, Word>>& trace_words();
std::vector<cplx> trace_signature(const IsolatedRep& rep);

/// s ∈ [0,1] with meridian_angle(q,k,s) = u, by bisection to full double precision.
double solve_s_for_u(int q, int k, double u);

IsolatedRep build_glued_rep(int q1, int q2, const IntersectionPoint& point, int k1, int k2,
                            GluingParameter gluing);

struct ValidationReport {
    double relation_residual = 0;
    double boundary_residual = 0;
    int commutant = 0;
    bool left_block_reducible = false;
    bool right_block_reducible = false;
    int boundary_stabilizer_dim = 0;  // real dimension in su(3)
    bool passes(double tol = kTolMat) const;
};

ValidationReport validate_isolated(const IsolatedRep& rep);

struct RejectedGluing {
    int k1, k2;
    std::size_t point_index;
    GluingParameter gluing;
    double boundary_residual;
    std::string reason;
};

struct EnumerationResult {
    int q1 = 3, q2 = 3;
    std::size_t point_count = 0;  // Σ over arcs of curve intersections
    std::vector<IsolatedRep> catalog;
    std::vector<RejectedGluing> rejected;
    std::size_t distinct_classes = 0;  // catalog entries with distinct trace signatures
};

/// Iterates arcs, intersection points and gluing parameters, one task per arc pair.
EnumerationResult enumerate_isolated(int q1, int q2, int threads = 1);
std::size_t count_distinct_classes(const std::vector<IsolatedRep>& reps, double tol = 1e-8);

long casson_su2_knot(int q);
long casson_su3_spliced(int q1, int q2);
/// Σ_{k₁,k₂}(q₁−k₁)(q₂−k₂).
long arc_intersection_total(int q1, int q2);

enum class RestrictionType { irreducible, reducible_nonabelian, abelian };

enum class ComponentType {
    su2xu1_mod_center,
    torus_mod_center,
    torus_mod_u1,
    isolated_point,
    reducible_circle,
    trivial
};

const char* to_string(ComponentType t);

/// Component of the representation variety through α = α₁ ∪ α₂.
ComponentType classify_component(int alpha0_stab_dim, RestrictionType red1, RestrictionType red2,
                                 bool same_side = false, bool trivial = false);
int component_euler_characteristic(ComponentType t);
RestrictionType restriction_type(const Mat& x, const Mat& y);

void validate_q(int q);

}  // namespace casson
