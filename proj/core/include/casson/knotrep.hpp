#pragma once

#include <string>
#include <vector>

#include "casson/liealg.hpp"

namespace casson {

/// One syllable g^e of a group word; `gen` indexes the generator list.
struct Letter {
    int gen;
    long exp;
};

using Word = std::vector<Letter>;

Word word_concat(const Word& a, const Word& b);
Word word_inverse(const Word& w);
Word word_power(const Word& w, long k);
/// Evaluates a word on generator images (unitary matrices).
Mat evaluate(const Word& w, const std::vector<Mat>& images);
std::string to_string(const Word& w, const std::vector<std::string>& names);

/// ⟨x, y | x^p = y^q⟩ with meridian and longitude words. Generator 0 is x, 1 is y.
struct TorusKnotPresentation {
    int p = 2;
    int q = 3;
    Word meridian;
    Word longitude;

    static TorusKnotPresentation make(int p, int q);
    /// Degree of each generator in H₁ ≅ ℤ generated by the meridian.
    long degree(int gen) const { return gen == 0 ? q : p; }
    long degree(const Word& w) const;
};

class KnotGroupRep {
public:
    KnotGroupRep(TorusKnotPresentation pres, UnitaryMatrix x, UnitaryMatrix y, double tol = kTolMat);

    const TorusKnotPresentation& presentation() const { return pres_; }
    const UnitaryMatrix& image_x() const { return x_; }
    const UnitaryMatrix& image_y() const { return y_; }
    GroupTag target() const { return x_.tag(); }
    int n() const { return x_.n(); }

    Mat image(const Word& w) const;
    Mat meridian_image() const { return image(pres_.meridian); }
    Mat longitude_image() const { return image(pres_.longitude); }
    double relation_residual() const;

    /// Whether the rep is an endpoint (s ∈ {0,1}) of a Klassen arc closure.
    bool on_boundary = false;

private:
    TorusKnotPresentation pres_;
    UnitaryMatrix x_;
    UnitaryMatrix y_;
};

/// g·rep·g⁻¹.
KnotGroupRep conjugate(const KnotGroupRep& rep, const Mat& g);

struct PillowcasePoint {
    double u = 0;  // [0, 1/2]
    double v = 0;  // [0, 1)
};

/// Canonical representative of (u, v) modulo ℤ² and (u,v) ~ (−u,−v).
PillowcasePoint canonical_pillowcase(double u, double v);

/// The arc β_{k,s} of irreducible SU(2) representations of the (2,q) torus knot group.
KnotGroupRep klassen_rep(int q, int k, double s);
/// u ∈ [0,1/2] with β_{k,s}(μ) conjugate to diag(e^{2πiu}, e^{−2πiu}).
double meridian_angle(int q, int k, double s);
PillowcasePoint boundary_pillowcase(const KnotGroupRep& rep);
/// Diagonal SU(2) representation with meridian image diag(e^{2πit}, e^{−2πit}).
KnotGroupRep abelian_rep(int q, double t);
bool is_irreducible(const KnotGroupRep& rep);

void validate_klassen_args(int q, int k);

}  // namespace casson
