#pragma once

#include "casson/knotrep.hpp"

namespace casson {

/// U(1) character determined by its meridian image e^{iθ}.
struct Character {
    double theta = 0;
    cplx meridian_image() const { return std::polar(1.0, theta); }
};

enum class TwistSide { left, right };

/// χ_θ ⊙ β as an S(U(2)×U(1)) (left) or S(U(1)×U(2)) (right) representation.
class TwistedSU3Rep {
public:
    TwistedSU3Rep(KnotGroupRep base, double theta, TwistSide side);

    const KnotGroupRep& base() const { return base_; }
    double theta() const { return theta_; }
    TwistSide side() const { return side_; }

    /// Image of a word: twist of the base image by χ_θ of the word's degree.
    Mat image(const Word& w) const;
    Mat image_x() const { return image({{0, 1}}); }
    Mat image_y() const { return image({{1, 1}}); }
    Mat meridian_image() const { return image(base_.presentation().meridian); }
    Mat longitude_image() const { return image(base_.presentation().longitude); }
    double relation_residual() const;

private:
    KnotGroupRep base_;
    double theta_;
    TwistSide side_;
};

/// diag(e^{iθd}, e^{iθd}, e^{−2iθd})·block(A, 1) for χ(g) = e^{iθd}.
Mat twist_matrix_left(double phase, const Mat& a);
/// diag(e^{2iθd}, e^{−iθd}, e^{−iθd})·block(1, A).
Mat twist_matrix_right(double phase, const Mat& a);

TwistedSU3Rep twist_left(double theta, const KnotGroupRep& base);
TwistedSU3Rep twist_right(double theta, const KnotGroupRep& base);

struct MobiusPoint {
    int k;
    double s;
    double theta;
};

/// Canonical point of the Möbius band of twisted arc k, identifying (s,0) with (1−s,π).
MobiusPoint mobius_chart(int q, int k, double s, double theta);
/// Number of Möbius bands of twisted reducibles for the (2,q) torus knot.
int mobius_band_count(int q);

/// Conjugacy invariants of a pair (A, B): tr A, tr B, tr AB, tr A²B, tr AB² and eigen-angles.
struct PairInvariants {
    std::vector<cplx> traces;
    EigenAngleVector angles_a;
    EigenAngleVector angles_b;

    double distance(const PairInvariants& other) const;
};

PairInvariants pair_invariants(const Mat& a, const Mat& b);

}  // namespace casson
