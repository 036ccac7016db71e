#include "casson/twist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace casson {

namespace {

constexpr double kPi = std::numbers::pi;

double angle_set_distance(const EigenAngleVector& a, const EigenAngleVector& b) {
    if (a.angles.size() != b.angles.size()) return INFINITY;
    std::vector<std::size_t> perm(b.angles.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = INFINITY;
    do {
        double worst = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            double d = std::fabs(a.angles[i] - b.angles[perm[i]]);
            d = std::min(d, 1.0 - d);
            worst = std::max(worst, d);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

Mat twist_matrix_left(double phase, const Mat& a) {
    Mat d = Mat::Zero(3, 3);
    d(0, 0) = d(1, 1) = std::polar(1.0, phase);
    d(2, 2) = std::polar(1.0, -2 * phase);
    return d * block_diag(a, Mat::Identity(1, 1));
}

Mat twist_matrix_right(double phase, const Mat& a) {
    Mat d = Mat::Zero(3, 3);
    d(0, 0) = std::polar(1.0, 2 * phase);
    d(1, 1) = d(2, 2) = std::polar(1.0, -phase);
    return d * block_diag(Mat::Identity(1, 1), a);
}

TwistedSU3Rep::TwistedSU3Rep(KnotGroupRep base, double theta, TwistSide side)
    : base_(std::move(base)), theta_(theta), side_(side) {
    if (base_.n() != 2 || base_.target() != GroupTag::SU2)
        throw ValidationError("twisting requires an SU(2) base representation");
}

Mat TwistedSU3Rep::image(const Word& w) const {
    const double phase = theta_ * static_cast<double>(base_.presentation().degree(w));
    const Mat a = base_.image(w);
    return side_ == TwistSide::left ? twist_matrix_left(phase, a) : twist_matrix_right(phase, a);
}

double TwistedSU3Rep::relation_residual() const {
    const auto& pres = base_.presentation();
    return (image({{0, pres.p}}) - image({{1, pres.q}})).norm();
}

TwistedSU3Rep twist_left(double theta, const KnotGroupRep& base) {
    return TwistedSU3Rep(base, theta, TwistSide::left);
}

TwistedSU3Rep twist_right(double theta, const KnotGroupRep& base) {
    return TwistedSU3Rep(base, theta, TwistSide::right);
}

MobiusPoint mobius_chart(int q, int k, double s, double theta) {
    validate_klassen_args(q, k);
    if (!(s > 0.0 && s < 1.0)) throw ValidationError("mobius_chart: s must lie in (0,1)");
    if (!(theta >= 0.0 && theta <= kPi)) throw ValidationError("mobius_chart: theta must lie in [0,pi]");
    // the seam θ = 0 is glued to θ = π with s reflected; keep the θ = π copy
    if (theta == 0.0) return {k, 1.0 - s, kPi};
    return {k, s, theta};
}

int mobius_band_count(int q) {
    if (q < 3 || q % 2 == 0) throw ValidationError("q must be odd and at least 3");
    return (q - 1) / 2;
}

double PairInvariants::distance(const PairInvariants& other) const {
    double d = 0;
    for (std::size_t i = 0; i < traces.size() && i < other.traces.size(); ++i)
        d = std::max(d, std::abs(traces[i] - other.traces[i]));
    d = std::max(d, angle_set_distance(angles_a, other.angles_a));
    d = std::max(d, angle_set_distance(angles_b, other.angles_b));
    return d;
}

PairInvariants pair_invariants(const Mat& a, const Mat& b) {
    PairInvariants inv;
    inv.traces = {a.trace(), b.trace(), (a * b).trace(), (a * a * b).trace(), (a * b * b).trace()};
    inv.angles_a = eig_angles(a);
    inv.angles_b = eig_angles(b);
    return inv;
}

}  // namespace casson
