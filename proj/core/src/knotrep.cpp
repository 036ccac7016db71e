#include "casson/knotrep.hpp"

#include <cmath>
#include <numeric>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace casson {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap01(double a) {
    a -= std::floor(a);
    if (a >= 1.0 - 1e-13) a = 0.0;
    return a;
}

double snap(double a, double target, double tol = 1e-12) {
    return std::fabs(a - target) <= tol ? target : a;
}

}  // namespace

Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word word_inverse(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

Word word_power(const Word& w, long k) {
    const Word base = k < 0 ? word_inverse(w) : w;
    Word out;
    for (long i = 0; i < std::labs(k); ++i) out = word_concat(out, base);
    return out;
}

Mat evaluate(const Word& w, const std::vector<Mat>& images) {
    if (images.empty()) throw ValidationError("evaluate: no generator images");
    const auto n = images.front().rows();
    Mat acc = Mat::Identity(n, n);
    for (const auto& l : w) {
        if (l.gen < 0 || l.gen >= static_cast<int>(images.size()))
            throw ValidationError("evaluate: generator index out of range");
        acc = acc * unitary_power(images[l.gen], l.exp);
    }
    return acc;
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
    std::ostringstream os;
    for (const auto& l : w) {
        os << names.at(l.gen);
        if (l.exp != 1) os << '^' << l.exp;
    }
    return os.str();
}

TorusKnotPresentation TorusKnotPresentation::make(int p, int q) {
    if (p < 1 || q < 1) throw ValidationError("torus knot exponents must be positive");
    if (std::gcd(p, q) != 1) throw ValidationError("torus knot exponents must be coprime");
    TorusKnotPresentation t;
    t.p = p;
    t.q = q;
    // μ = x^c y^d with c·q + d·p = 1, so that μ ↦ 1 in H₁
    long c = 0, d = 0;
    if (p == 2) {
        c = 1;
        d = (1 - q) / 2;
    } else {
        long old_r = q, r = p, old_s = 1, s = 0, old_t = 0, tt = 1;
        while (r != 0) {
            const long quo = old_r / r;
            std::tie(old_r, r) = std::pair{r, old_r - quo * r};
            std::tie(old_s, s) = std::pair{s, old_s - quo * s};
            std::tie(old_t, tt) = std::pair{tt, old_t - quo * tt};
        }
        c = old_s;
        d = old_t;
    }
    if (c != 0) t.meridian.push_back({0, c});
    if (d != 0) t.meridian.push_back({1, d});
    // λ = x^p μ^{−pq}
    t.longitude = word_concat(Word{{0, p}}, word_power(t.meridian, -static_cast<long>(p) * q));
    return t;
}

long TorusKnotPresentation::degree(const Word& w) const {
    long d = 0;
    for (const auto& l : w) d += degree(l.gen) * l.exp;
    return d;
}

KnotGroupRep::KnotGroupRep(TorusKnotPresentation pres, UnitaryMatrix x, UnitaryMatrix y, double tol)
    : pres_(std::move(pres)), x_(std::move(x)), y_(std::move(y)) {
    if (x_.n() != y_.n()) throw ValidationError("generator images have different sizes");
    if (relation_residual() > tol) throw ValidationError("relation x^p = y^q violated");
}

Mat KnotGroupRep::image(const Word& w) const { return evaluate(w, {x_.mat(), y_.mat()}); }

double KnotGroupRep::relation_residual() const {
    return (unitary_power(x_.mat(), pres_.p) - unitary_power(y_.mat(), pres_.q)).norm();
}

KnotGroupRep conjugate(const KnotGroupRep& rep, const Mat& g) {
    const Mat gi = g.adjoint();
    KnotGroupRep out(rep.presentation(), UnitaryMatrix(g * rep.image_x().mat() * gi, rep.target()),
                     UnitaryMatrix(g * rep.image_y().mat() * gi, rep.target()));
    out.on_boundary = rep.on_boundary;
    return out;
}

PillowcasePoint canonical_pillowcase(double u, double v) {
    u = wrap01(u);
    v = wrap01(v);
    if (u > 0.5) {
        u = wrap01(-u);
        v = wrap01(-v);
    }
    u = snap(snap(u, 0.0), 0.5);
    if ((u == 0.0 || u == 0.5) && v > 0.5) v = wrap01(-v);
    return {u, v};
}

void validate_klassen_args(int q, int k) {
    if (q < 3 || q % 2 == 0) throw ValidationError("q must be odd and at least 3");
    if (k < 1 || k > q - 2 || k % 2 == 0) throw ValidationError("k must be odd with 1 <= k <= q-2");
}

KnotGroupRep klassen_rep(int q, int k, double s) {
    validate_klassen_args(q, k);
    if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("s must lie in [0,1]");
    const cplx I(0, 1);
    // β(x) = i·cos πs + j·sin πs, β(y) = e^{kπi/q}
    const Mat bx = su2_from_quaternion(I * std::cos(kPi * s), std::sin(kPi * s));
    const Mat by = su2_from_quaternion(std::polar(1.0, k * kPi / q), 0.0);
    KnotGroupRep rep(TorusKnotPresentation::make(2, q), UnitaryMatrix(bx, GroupTag::SU2),
                     UnitaryMatrix(by, GroupTag::SU2));
    rep.on_boundary = (s == 0.0 || s == 1.0);
    return rep;
}

double meridian_angle(int q, int k, double s) {
    validate_klassen_args(q, k);
    if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("s must lie in [0,1]");
    const double c = std::cos(kPi * s) * std::sin(k * (q - 1) * kPi / (2.0 * q));
    return std::acos(std::clamp(c, -1.0, 1.0)) / (2.0 * kPi);
}

PillowcasePoint boundary_pillowcase(const KnotGroupRep& rep) {
    if (rep.n() != 2) throw ValidationError("boundary_pillowcase expects an SU(2) representation");
    const Mat m = rep.meridian_image();
    const Mat l = rep.longitude_image();
    if (is_scalar(m, 1e-9)) {
        const double u = wrap01(std::arg(m(0, 0)) / (2 * kPi));
        const auto la = eig_angles(reunitarize(l));
        return canonical_pillowcase(u, la.angles.front());
    }
    Eigen::ComplexEigenSolver<Mat> es(m);
    for (int i = 0; i < 2; ++i) {
        const double a = wrap01(std::arg(es.eigenvalues()(i)) / (2 * kPi));
        if (a <= 0.5) {
            const Eigen::VectorXcd v = es.eigenvectors().col(i).normalized();
            const cplx lv = v.dot(l * v);
            return canonical_pillowcase(a, std::arg(lv) / (2 * kPi));
        }
    }
    throw ValidationError("boundary_pillowcase: no meridian eigenvalue in [0,1/2]");
}

KnotGroupRep abelian_rep(int q, double t) {
    if (q < 3 || q % 2 == 0) throw ValidationError("q must be odd and at least 3");
    if (!(t >= 0.0 && t <= 0.5)) throw ValidationError("t must lie in [0,1/2]");
    // x ↦ μ^q, y ↦ μ^2 in the abelianization
    const Mat bx = su2_from_quaternion(std::polar(1.0, 2 * kPi * q * t), 0.0);
    const Mat by = su2_from_quaternion(std::polar(1.0, 4 * kPi * t), 0.0);
    return KnotGroupRep(TorusKnotPresentation::make(2, q), UnitaryMatrix(bx, GroupTag::SU2),
                        UnitaryMatrix(by, GroupTag::SU2));
}

bool is_irreducible(const KnotGroupRep& rep) {
    return commutant_dim({rep.image_x().mat(), rep.image_y().mat()}) == 1;
}

}  // namespace casson
