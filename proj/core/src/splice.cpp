#include "casson/splice.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace casson {

namespace {

constexpr double kPi = std::numbers::pi;

Rational frac(const Rational& r) {
    const long long fl =
        r.numerator() >= 0 ? r.numerator() / r.denominator() : -((-r.numerator() + r.denominator() - 1) / r.denominator());
    return r - Rational(fl);
}

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

/// Unitary g ∈ SU(2) with g·m·g⁻¹ = diag(e^{−iθ}, e^{iθ}).
Mat diagonalizer(const Mat& m, double theta) {
    Eigen::ComplexEigenSolver<Mat> es(m);
    const cplx lo = std::polar(1.0, -theta);
    const int first = std::abs(es.eigenvalues()(0) - lo) <= std::abs(es.eigenvalues()(1) - lo) ? 0 : 1;
    Eigen::VectorXcd v1 = es.eigenvectors().col(first).normalized();
    Eigen::VectorXcd v2 = es.eigenvectors().col(1 - first);
    v2 -= v1.dot(v2) * v1;
    v2.normalize();
    Mat p(2, 2);
    p.col(0) = v1;
    p.col(1) = v2;
    p.col(1) *= std::conj(p.determinant());
    return p.adjoint();
}

bool block_zero(const Mat& m, int fixed) {
    double off = 0;
    for (int i = 0; i < 3; ++i)
        if (i != fixed) off += std::norm(m(i, fixed)) + std::norm(m(fixed, i));
    return std::sqrt(off) <= kTolMat;
}

}  // namespace

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator() << '/' << r.denominator();
    return os.str();
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

void validate_q(int q) {
    if (q < 3 || q % 2 == 0) throw ValidationError("q must be odd and at least 3");
}

SplicedSumPresentation SplicedSumPresentation::make(int q1, int q2) {
    validate_q(q1);
    validate_q(q2);
    SplicedSumPresentation p;
    p.q1 = q1;
    p.q2 = q2;
    auto shift = [](Word w, int by) {
        for (auto& l : w) l.gen += by;
        return w;
    };
    const auto t1 = TorusKnotPresentation::make(2, q1);
    const auto t2 = TorusKnotPresentation::make(2, q2);
    p.mu1 = t1.meridian;
    p.lambda1 = t1.longitude;
    p.mu2 = shift(t2.meridian, 2);
    p.lambda2 = shift(t2.longitude, 2);
    return p;
}

const std::vector<std::string>& SplicedSumPresentation::generator_names() {
    static const std::vector<std::string> names{"x1", "y1", "x2", "y2"};
    return names;
}

TorusLineSegment gamma1_segment(int q1, int k1) {
    validate_klassen_args(q1, k1);
    return {Rational(q1), Rational(k1, 2 * q1), Rational(2 * q1 - k1, 2 * q1), q1 - k1};
}

TorusLineSegment gamma2_segment(int q2, int k2) {
    validate_klassen_args(q2, k2);
    return {Rational(1, q2), Rational(k2, 2 * q2), Rational(2 * q2 - k2, 2 * q2), q2 - k2};
}

std::vector<IntersectionPoint> intersection_points(int q1, int k1, int q2, int k2) {
    const auto g1 = gamma1_segment(q1, k1);
    const auto g2 = gamma2_segment(q2, k2);
    // γ₁(t₁) = (t₁, 1/2 + q₁t₁), γ₂(t₂) = (1/2 + q₂t₂, t₂) mod 1, with t = θ/π.
    // Eliminating t₂ forces (q₁q₂ − 1)·t₁ ∈ ℤ.
    const long long d = static_cast<long long>(q1) * q2 - 1;
    const Rational half(1, 2);
    std::vector<IntersectionPoint> out;
    for (long long j = 1; j < d; ++j) {
        const Rational t1(j, d);
        if (!(t1 > g1.start && t1 < g1.end)) continue;
        const Rational t2 = frac(half + Rational(q1) * t1);
        if (!(t2 > g2.start && t2 < g2.end)) continue;
        if (frac(half + Rational(q2) * t2) != t1)
            throw std::logic_error("intersection_points: inconsistent congruence");
        out.push_back({t1, t2});
    }
    return out;
}

long lattice_intersection_count(int q1, int k1, int q2, int k2, int multiplier) {
    validate_klassen_args(q1, k1);
    validate_klassen_args(q2, k2);
    const long long n = 2LL * (static_cast<long long>(q1) * q2 - 1) * multiplier;
    // cell (i, j) ↔ point (i/n, j/n); open parameter ranges checked in integers
    std::set<std::pair<long long, long long>> curve1;
    for (long long i = 0; i < n; ++i) {
        if (2LL * q1 * i <= k1 * n || 2LL * q1 * i >= (2LL * q1 - k1) * n) continue;
        curve1.insert({i, mod(n / 2 + q1 * i, n)});
    }
    long count = 0;
    for (long long j = 0; j < n; ++j) {
        if (2LL * q2 * j <= k2 * n || 2LL * q2 * j >= (2LL * q2 - k2) * n) continue;
        if (curve1.count({mod(n / 2 + q2 * j, n), j})) ++count;
    }
    return count;
}

Mat gluing_matrix_a1() {
    Mat a = Mat::Zero(3, 3);
    a(0, 1) = 1;
    a(1, 0) = -1;
    a(2, 2) = 1;
    return a;
}

Mat gluing_matrix_a2() {
    Mat a = Mat::Zero(3, 3);
    a(0, 0) = 1;
    a(1, 2) = 1;
    a(2, 1) = -1;
    return a;
}

double IsolatedRep::relation_residual() const {
    const auto imgs = image_list();
    const double r1 = (evaluate({{0, 2}}, imgs) - evaluate({{1, q1}}, imgs)).norm();
    const double r2 = (evaluate({{2, 2}}, imgs) - evaluate({{3, q2}}, imgs)).norm();
    return std::max(r1, r2);
}

double IsolatedRep::boundary_residual() const {
    const auto p = SplicedSumPresentation::make(q1, q2);
    const auto imgs = image_list();
    const double r1 = (evaluate(p.mu1, imgs) - evaluate(p.lambda2, imgs)).norm();
    const double r2 = (evaluate(p.lambda1, imgs) - evaluate(p.mu2, imgs)).norm();
    return std::max(r1, r2);
}

const std::vector<std::pair<std::string, Word>>& trace_words() {
    static const std::vector<std::pair<std::string, Word>> words{
        {"x1", {{0, 1}}},
        {"y1", {{1, 1}}},
        {"x2", {{2, 1}}},
        {"y2", {{3, 1}}},
        {"x1x2", {{0, 1}, {2, 1}}},
        {"x1y2", {{0, 1}, {3, 1}}},
        {"y1x2", {{1, 1}, {2, 1}}},
        {"x1y1x2y2", {{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
    };
    return words;
}

std::vector<cplx> trace_signature(const IsolatedRep& rep) {
    const auto imgs = rep.image_list();
    std::vector<cplx> out;
    for (const auto& [name, w] : trace_words()) out.push_back(evaluate(w, imgs).trace());
    return out;
}

double solve_s_for_u(int q, int k, double u) {
    double lo = 0.0, hi = 1.0;
    const double f_lo = meridian_angle(q, k, lo) - u;
    const double f_hi = meridian_angle(q, k, hi) - u;
    if (f_lo * f_hi > 0) throw ValidationError("solve_s_for_u: u outside the arc's meridian range");
    const bool increasing = f_hi > f_lo;
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double f = meridian_angle(q, k, mid) - u;
        if ((f < 0) == increasing)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

IsolatedRep build_glued_rep(int q1, int q2, const IntersectionPoint& point, int k1, int k2,
                            GluingParameter gluing) {
    IsolatedRep rep;
    rep.q1 = q1;
    rep.q2 = q2;
    rep.k1 = k1;
    rep.k2 = k2;
    rep.theta1 = point.theta1;
    rep.theta2 = point.theta2;
    rep.gluing = gluing;

    const double th1 = kPi * boost::rational_cast<double>(point.theta1);
    const double th2 = kPi * boost::rational_cast<double>(point.theta2);
    // θ = 2πu
    rep.s1 = solve_s_for_u(q1, k1, th1 / (2 * kPi));
    rep.s2 = solve_s_for_u(q2, k2, th2 / (2 * kPi));

    const auto b1 = klassen_rep(q1, k1, rep.s1);
    const auto b2 = klassen_rep(q2, k2, rep.s2);
    const auto b1d = conjugate(b1, diagonalizer(b1.meridian_image(), th1));
    const auto b2d = conjugate(b2, diagonalizer(b2.meridian_image(), th2));
    const auto a1 = twist_left(th1, b1d);
    const auto a2 = twist_right(th2, b2d);

    Mat x1 = a1.image_x(), y1 = a1.image_y(), x2 = a2.image_x(), y2 = a2.image_y();
    if (gluing.e1) {
        const Mat g = gluing_matrix_a1();
        x1 = g * x1 * g.adjoint();
        y1 = g * y1 * g.adjoint();
    }
    if (gluing.e2) {
        const Mat g = gluing_matrix_a2();
        x2 = g * x2 * g.adjoint();
        y2 = g * y2 * g.adjoint();
    }
    rep.images = {x1, y1, x2, y2};

    const double res = rep.boundary_residual();
    if (!(res <= kTolMat)) {
        std::ostringstream os;
        os << "boundary restrictions disagree (residual " << res << ") for gluing (" << gluing.e1 << ','
           << gluing.e2 << ')';
        throw AssemblyError(os.str(), res);
    }
    return rep;
}

bool ValidationReport::passes(double tol) const {
    return relation_residual <= tol && boundary_residual <= tol && commutant == 1 && left_block_reducible &&
           right_block_reducible && boundary_stabilizer_dim == 2;
}

ValidationReport validate_isolated(const IsolatedRep& rep) {
    ValidationReport r;
    r.relation_residual = rep.relation_residual();
    r.boundary_residual = rep.boundary_residual();
    r.commutant = commutant_dim(std::span<const Mat>(rep.images.data(), rep.images.size()));
    r.left_block_reducible = block_zero(rep.images[0], 2) && block_zero(rep.images[1], 2);
    r.right_block_reducible = block_zero(rep.images[2], 0) && block_zero(rep.images[3], 0);
    const auto p = SplicedSumPresentation::make(rep.q1, rep.q2);
    const auto imgs = rep.image_list();
    r.boundary_stabilizer_dim = commutant_dim({evaluate(p.mu1, imgs), evaluate(p.lambda1, imgs)}) - 1;
    return r;
}

std::size_t count_distinct_classes(const std::vector<IsolatedRep>& reps, double tol) {
    std::vector<std::vector<cplx>> reps_sig;
    for (const auto& rep : reps) {
        const auto sig = trace_signature(rep);
        const bool seen = std::any_of(reps_sig.begin(), reps_sig.end(), [&](const auto& other) {
            for (std::size_t i = 0; i < sig.size(); ++i)
                if (std::abs(sig[i] - other[i]) > tol) return false;
            return true;
        });
        if (!seen) reps_sig.push_back(sig);
    }
    return reps_sig.size();
}

namespace {

struct ArcResult {
    std::size_t points = 0;
    std::vector<IsolatedRep> reps;
    std::vector<RejectedGluing> rejected;
};

ArcResult enumerate_arc_pair(int q1, int k1, int q2, int k2) {
    ArcResult out;
    const auto pts = intersection_points(q1, k1, q2, k2);
    out.points = pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (const auto& g : kAllGluings) {
            try {
                out.reps.push_back(build_glued_rep(q1, q2, pts[i], k1, k2, g));
            } catch (const AssemblyError& e) {
                out.rejected.push_back({k1, k2, i, g, e.residual, e.what()});
            }
        }
    return out;
}

}  // namespace

EnumerationResult enumerate_isolated(int q1, int q2, int threads) {
    validate_q(q1);
    validate_q(q2);
    std::vector<std::pair<int, int>> arcs;
    for (int k1 = 1; k1 <= q1 - 2; k1 += 2)
        for (int k2 = 1; k2 <= q2 - 2; k2 += 2) arcs.emplace_back(k1, k2);

    std::vector<ArcResult> results(arcs.size());
    const std::size_t width = static_cast<std::size_t>(std::max(1, threads));
    for (std::size_t start = 0; start < arcs.size(); start += width) {
        std::vector<std::future<ArcResult>> batch;
        for (std::size_t i = start; i < std::min(arcs.size(), start + width); ++i)
            batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred,
                                       enumerate_arc_pair, q1, arcs[i].first, q2, arcs[i].second));
        for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
    }

    // arcs are already in (k1, k2) order, points and gluings in generation order
    EnumerationResult out;
    out.q1 = q1;
    out.q2 = q2;
    for (auto& r : results) {
        out.point_count += r.points;
        std::move(r.reps.begin(), r.reps.end(), std::back_inserter(out.catalog));
        std::move(r.rejected.begin(), r.rejected.end(), std::back_inserter(out.rejected));
    }
    out.distinct_classes = count_distinct_classes(out.catalog);
    return out;
}

long casson_su2_knot(int q) {
    validate_q(q);
    return (static_cast<long>(q) * q - 1) / 8;
}

long casson_su3_spliced(int q1, int q2) { return 16 * casson_su2_knot(q1) * casson_su2_knot(q2); }

long arc_intersection_total(int q1, int q2) {
    validate_q(q1);
    validate_q(q2);
    long total = 0;
    for (int k1 = 1; k1 <= q1 - 2; k1 += 2)
        for (int k2 = 1; k2 <= q2 - 2; k2 += 2) total += static_cast<long>(q1 - k1) * (q2 - k2);
    return total;
}

const char* to_string(ComponentType t) {
    switch (t) {
        case ComponentType::su2xu1_mod_center: return "S(U2xU1)/Z3";
        case ComponentType::torus_mod_center: return "T/Z3";
        case ComponentType::torus_mod_u1: return "T/U1";
        case ComponentType::isolated_point: return "isolated-point";
        case ComponentType::reducible_circle: return "reducible-circle";
        case ComponentType::trivial: return "trivial";
    }
    return "?";
}

ComponentType classify_component(int alpha0_stab_dim, RestrictionType red1, RestrictionType red2, bool same_side,
                                 bool trivial) {
    if (trivial) return ComponentType::trivial;
    if (red1 == RestrictionType::abelian || red2 == RestrictionType::abelian)
        throw ValidationError("an abelian restriction forces the trivial representation");
    if (alpha0_stab_dim < 2) throw ValidationError("boundary restriction is abelian; stabilizer contains a torus");
    if (alpha0_stab_dim > 2) return ComponentType::su2xu1_mod_center;
    const int irreducibles = (red1 == RestrictionType::irreducible) + (red2 == RestrictionType::irreducible);
    if (irreducibles == 2) return ComponentType::torus_mod_center;
    if (irreducibles == 1) return ComponentType::torus_mod_u1;
    return same_side ? ComponentType::reducible_circle : ComponentType::isolated_point;
}

int component_euler_characteristic(ComponentType t) {
    switch (t) {
        case ComponentType::isolated_point:
        case ComponentType::trivial: return 1;
        default: return 0;
    }
}

RestrictionType restriction_type(const Mat& x, const Mat& y) {
    const int c = commutant_dim({x, y});
    if (c == 1) return RestrictionType::irreducible;
    if (c == 2) return RestrictionType::reducible_nonabelian;
    return RestrictionType::abelian;
}

}  // namespace casson
