#include "casson/maslov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "casson/cohomology.hpp"
#include "casson/knotrep.hpp"
#include "casson/splice.hpp"
#include "casson/torusop.hpp"

namespace casson {

namespace {

constexpr double kPi = std::numbers::pi;

RMat orthonormal_range(const RMat& a, double rel_tol = kTolRank) {
    Eigen::JacobiSVD<RMat> svd(a, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? rank_cutoff(sv(0), rel_tol) : 0.0;
    int r = 0;
    while (r < sv.size() && sv(r) > cutoff) ++r;
    return svd.matrixU().leftCols(r);
}

// Souriau image Z Zᵀ; a Lagrangian L equals {v : U v̄ = v}.
Mat souriau(const Mat& frame) { return frame * frame.transpose(); }

Mat unitary_log(const Mat& u) {
    Eigen::ComplexSchur<Mat> schur(u);
    const Mat& t = schur.matrixT();
    Mat d = Mat::Zero(u.rows(), u.cols());
    for (Eigen::Index k = 0; k < u.rows(); ++k) d(k, k) = std::log(t(k, k));
    return schur.matrixU() * d * schur.matrixU().adjoint();
}

Mat unitary_exp(const Mat& h) {
    // h is skew-hermitian, so ih is hermitian
    Eigen::SelfAdjointEigenSolver<Mat> es(cplx(0, -1) * h);
    Mat d = Mat::Zero(h.rows(), h.cols());
    for (Eigen::Index k = 0; k < h.rows(); ++k) d(k, k) = std::polar(1.0, es.eigenvalues()(k));
    return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

// Angles of the eigenvalues of a unitary matrix, each in [0, 2π).
std::vector<double> unit_angles(const Mat& w) {
    Eigen::ComplexEigenSolver<Mat> es(w, false);
    std::vector<double> out;
    for (Eigen::Index k = 0; k < w.rows(); ++k) {
        double a = std::arg(es.eigenvalues()(k));
        if (a < 0) a += 2 * kPi;
        out.push_back(a);
    }
    return out;
}

double branch_sum(const Mat& w, double shift) {
    double s = 0;
    for (double a : unit_angles(w)) {
        double b = std::fmod(a + shift, 2 * kPi);
        if (b < 0) b += 2 * kPi;
        s += b;
    }
    return s;
}

bool has_unit_eigenvalue(const Mat& w, double tol = 1e-8) {
    for (double a : unit_angles(w))
        if (std::min(a, 2 * kPi - a) < tol) return true;
    return false;
}

// Continuous change of arg det W(t) over [t0, t1], refining until each step is small.
double unwrapped_phase(const std::function<Mat(double)>& w, double t0, double t1, cplx d0, cplx d1,
                       int depth) {
    const double step = std::arg(d1 / d0);
    if (depth > 48 || std::fabs(step) < 0.25) return step;
    const double tm = 0.5 * (t0 + t1);
    const cplx dm = w(tm).determinant();
    return unwrapped_phase(w, t0, tm, d0, dm, depth + 1) + unwrapped_phase(w, tm, t1, dm, d1, depth + 1);
}

std::string slope_form(int pq, bool plus) {
    std::ostringstream os;
    os << "U(dm" << (plus ? " + " : " - ") << pq << "dℓ)";
    return os.str();
}

}  // namespace

SymplecticSpace::SymplecticSpace(RMat j, double tol) : j_(std::move(j)) {
    const auto n = j_.rows();
    if (n == 0 || n != j_.cols() || n % 2 != 0) throw ValidationError("J must be square of even size");
    if ((j_ * j_ + RMat::Identity(n, n)).norm() > tol) throw ValidationError("J² ≠ −Id");
    if ((j_.transpose() * j_ - RMat::Identity(n, n)).norm() > tol) throw ValidationError("J is not orthogonal");

    std::vector<RVec> cols;
    for (Eigen::Index k = 0; k < n && static_cast<Eigen::Index>(cols.size()) < n; ++k) {
        RVec v = RVec::Unit(n, k);
        for (const auto& c : cols) v -= c.dot(v) * c;
        if (v.norm() < 1e-6) continue;
        v.normalize();
        cols.push_back(v);
        cols.push_back(j_ * v);
    }
    frame_.resize(n, n / 2);
    for (Eigen::Index k = 0; k < n / 2; ++k) frame_.col(k) = cols[2 * k];
}

SymplecticSpace SymplecticSpace::standard(int n) {
    RMat j = RMat::Zero(2 * n, 2 * n);
    j.bottomLeftCorner(n, n) = RMat::Identity(n, n);
    j.topRightCorner(n, n) = -RMat::Identity(n, n);
    return SymplecticSpace(j);
}

Mat SymplecticSpace::to_complex(const RMat& vectors) const {
    const RMat re = frame_.transpose() * vectors;
    const RMat im = (j_ * frame_).transpose() * vectors;
    Mat z(re.rows(), re.cols());
    z.real() = re;
    z.imag() = im;
    return z;
}

RMat SymplecticSpace::to_real(const Mat& coords) const {
    return frame_ * coords.real() + (j_ * frame_) * coords.imag();
}

Lagrangian::Lagrangian(const SymplecticSpace& space, const RMat& spanning, double tol) {
    if (spanning.rows() != space.dim()) throw ValidationError("Lagrangian: wrong ambient dimension");
    basis_ = orthonormal_range(spanning);
    if (basis_.cols() != space.half_dim()) throw ValidationError("Lagrangian: span has wrong dimension");
    if ((basis_.transpose() * space.J() * basis_).norm() > tol)
        throw ValidationError("Lagrangian: symplectic form does not vanish on the span");
}

Lagrangian apply_J(const SymplecticSpace& space, const Lagrangian& l) {
    return Lagrangian(space, space.J() * l.basis());
}

Lagrangian lagrangian_from_frame(const SymplecticSpace& space, const Mat& unitary_frame) {
    return Lagrangian(space, space.to_real(unitary_frame));
}

double max_principal_angle(const RMat& a, const RMat& b) {
    const RMat qa = orthonormal_range(a);
    const RMat qb = orthonormal_range(b);
    if (qa.cols() != qb.cols()) return std::numbers::pi / 2;
    // sine form keeps full precision for small angles, where acos of a cosine near 1 does not
    Eigen::JacobiSVD<RMat> svd(qb - qa * (qa.transpose() * qb));
    return std::asin(std::clamp(svd.singularValues()(0), 0.0, 1.0));
}

int intersection_dim(const Lagrangian& a, const Lagrangian& b, double tol) {
    Eigen::JacobiSVD<RMat> svd(a.basis().transpose() * b.basis());
    int d = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > 1.0 - tol) ++d;
    return d;
}

LagrangianPath constant_path(const SymplecticSpace& space, const Lagrangian& l) {
    const Mat z = l.frame(space);
    return [z](double) { return z; };
}

LagrangianPath geodesic_path(const SymplecticSpace& space, const Lagrangian& from, const Lagrangian& to) {
    const Mat z0 = from.frame(space);
    const Mat gen = unitary_log(to.frame(space) * z0.adjoint());
    return [z0, gen](double t) { return Mat(unitary_exp(t * gen) * z0); };
}

LagrangianPath concatenate(const LagrangianPath& a, const LagrangianPath& b) {
    return [a, b](double t) { return t <= 0.5 ? a(2 * t) : b(2 * t - 1); };
}

LagrangianPath piecewise_geodesic(const SymplecticSpace& space, const std::vector<Lagrangian>& waypoints) {
    if (waypoints.size() < 2) throw ValidationError("piecewise_geodesic needs at least two waypoints");
    std::vector<LagrangianPath> legs;
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
        legs.push_back(geodesic_path(space, waypoints[i], waypoints[i + 1]));
    return [legs](double t) {
        const double x = std::clamp(t, 0.0, 1.0) * static_cast<double>(legs.size());
        const auto i = std::min(static_cast<std::size_t>(x), legs.size() - 1);
        return legs[i](x - static_cast<double>(i));
    };
}

LagrangianPath reverse(const LagrangianPath& a) {
    return [a](double t) { return a(1 - t); };
}

LagrangianPath j_path(const LagrangianPath& a) {
    return [a](double t) { return Mat(cplx(0, 1) * a(t)); };
}

int maslov_index(const LagrangianPath& a, const LagrangianPath& b, bool regularize) {
    auto w = [&](double t) { return Mat(souriau(a(t)) * souriau(b(t)).adjoint()); };
    const Mat w0 = w(0.0);
    const Mat w1 = w(1.0);
    if (!regularize && (has_unit_eigenvalue(w0) || has_unit_eigenvalue(w1)))
        throw ValidationError("maslov_index: degenerate endpoint and regularization disabled");
    // rotating A by e^{εJ} multiplies W by e^{2iε}
    const double shift = regularize ? 2 * kMaslovEpsilon : 0.0;

    const int pieces = 64;
    double phase = 0;
    cplx prev = w0.determinant();
    for (int i = 1; i <= pieces; ++i) {
        const double t0 = static_cast<double>(i - 1) / pieces;
        const double t1 = static_cast<double>(i) / pieces;
        const cplx next = (i == pieces ? w1 : w(t1)).determinant();
        phase += unwrapped_phase(w, t0, t1, prev, next, 0);
        prev = next;
    }
    const double jump = branch_sum(w1, shift) - branch_sum(w0, shift);
    return static_cast<int>(std::lround((phase - jump) / (2 * kPi)));
}

int triple_index_along(const LagrangianPath& p1, const LagrangianPath& p2, const LagrangianPath& p3) {
    return maslov_index(j_path(p1), p2) + maslov_index(j_path(p2), p3) - maslov_index(j_path(p1), p3);
}

int triple_index(const SymplecticSpace& space, const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                 const Lagrangian& base) {
    return triple_index_along(geodesic_path(space, base, l1), geodesic_path(space, base, l2),
                              geodesic_path(space, base, l3));
}

int triple_index(const SymplecticSpace& space, const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
    return triple_index(space, l1, l2, l3, l1);
}

Mat haar_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Mat z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z(i, j) = cplx(g(rng), g(rng));
    Eigen::HouseholderQR<Mat> qr(z);
    Mat q = qr.householderQ();
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < n; ++k) {
        const cplx d = r(k, k);
        q.col(k) *= std::abs(d) > 0 ? d / std::abs(d) : cplx(1);
    }
    return q;
}

Lagrangian random_lagrangian(const SymplecticSpace& space, std::mt19937_64& rng) {
    return lagrangian_from_frame(space, haar_unitary(space.half_dim(), rng));
}

Lagrangian random_lagrangian_containing(const SymplecticSpace& space, const RMat& isotropic, std::mt19937_64& rng) {
    const int n = space.half_dim();
    Mat frame(n, n);
    const Mat given = space.to_complex(isotropic);
    const auto k = given.cols();
    frame.leftCols(k) = given;
    const Mat extra = haar_unitary(n, rng);
    Eigen::Index filled = k;
    for (Eigen::Index c = 0; c < n && filled < n; ++c) {
        Eigen::VectorXcd v = extra.col(c);
        for (Eigen::Index j = 0; j < filled; ++j) v -= frame.col(j).dot(v) * frame.col(j);
        if (v.norm() < 1e-6) continue;
        frame.col(filled++) = v.normalized();
    }
    return lagrangian_from_frame(space, frame);
}

namespace {

RMat model_j(const std::vector<int>& forms, int coeff_dim) {
    // 1 ↦ dm∧dℓ ↦ −1, dm ↦ dℓ ↦ −dm
    static const int partner[4] = {3, 2, 1, 0};
    static const double sign[4] = {1, 1, -1, -1};
    const int m = static_cast<int>(forms.size());
    RMat j = RMat::Zero(m * coeff_dim, m * coeff_dim);
    for (int a = 0; a < m; ++a) {
        int b = -1;
        for (int c = 0; c < m; ++c)
            if (forms[c] == partner[forms[a]]) b = c;
        if (b < 0) throw ValidationError("form block is not J-invariant");
        j.block(b * coeff_dim, a * coeff_dim, coeff_dim, coeff_dim) =
            sign[forms[a]] * RMat::Identity(coeff_dim, coeff_dim);
    }
    return j;
}

std::vector<int> block_forms(FormBlock block) {
    switch (block) {
        case FormBlock::even: return {0, 3};
        case FormBlock::odd: return {1, 2};
        case FormBlock::all: break;
    }
    return {0, 1, 2, 3};
}

}  // namespace

ModelSpace::ModelSpace(int coeff_dim, FormBlock block)
    : coeff_dim_(coeff_dim), forms_(block_forms(block)), space_(model_j(forms_, coeff_dim)) {}

RMat ModelSpace::tensor(const RMat& coeff_basis, const FormVec& f) const {
    if (coeff_basis.rows() != coeff_dim_) throw ValidationError("coefficient basis has wrong size");
    const double w[4] = {f.one, f.dm, f.dl, f.dmdl};
    RMat out = RMat::Zero(dim(), coeff_basis.cols());
    for (int form = 0; form < 4; ++form) {
        if (w[form] == 0) continue;
        auto it = std::find(forms_.begin(), forms_.end(), form);
        if (it == forms_.end()) throw ValidationError("form lies outside the model block");
        const auto pos = static_cast<Eigen::Index>(it - forms_.begin());
        out.middleRows(pos * coeff_dim_, coeff_dim_) = w[form] * coeff_basis;
    }
    return out;
}

NamedSubspace named_span(const ModelSpace& model, const std::vector<std::pair<RMat, FormVec>>& pieces,
                         std::string tag) {
    Eigen::Index cols = 0;
    for (const auto& p : pieces) cols += p.first.cols();
    RMat all(model.dim(), cols);
    Eigen::Index at = 0;
    for (const auto& [c, f] : pieces) {
        all.middleCols(at, c.cols()) = model.tensor(c, f);
        at += c.cols();
    }
    return {std::move(tag), orthonormal_range(all)};
}

NamedSubspace l_hat_minus(const ModelSpace& model) {
    const RMat u = RMat::Identity(model.coeff_dim(), model.coeff_dim());
    return named_span(model, {{u, {.one = 1}}, {u, {.dl = 1}}}, "U ⊕ U dℓ");
}

NamedSubspace l_hat_plus(const ModelSpace& model) {
    const auto minus = l_hat_minus(model);
    return {"J(U ⊕ U dℓ)", orthonormal_range(model.symplectic().J() * minus.basis)};
}

namespace {

struct Entry {
    std::string tag;
    FormVec form;
};

TripleTerm eval_triple(const std::string& group, int coeff_dim, const std::string& coeff_name, const Entry& a,
                       const Entry& b, const Entry& c) {
    const bool even = (a.form.one != 0 || a.form.dmdl != 0);
    const ModelSpace model(coeff_dim, even ? FormBlock::even : FormBlock::odd);
    const RMat u = RMat::Identity(coeff_dim, coeff_dim);
    auto lag = [&](const Entry& e) {
        return Lagrangian(model.symplectic(), named_span(model, {{u, e.form}}, e.tag).basis);
    };
    auto name = [&](const Entry& e) {
        std::string s = e.tag;
        const auto pos = s.find('U');
        if (pos != std::string::npos) s.replace(pos, 1, coeff_name);
        return s;
    };
    TripleTerm t;
    t.group = group;
    t.expression = "τ(" + name(a) + ", " + name(b) + ", " + name(c) + ")";
    t.value = triple_index(model.symplectic(), lag(a), lag(b), lag(c));
    t.identity_forced = a.tag == b.tag || b.tag == c.tag;
    return t;
}

}  // namespace

std::vector<TripleTerm> boundary_triple_terms(int q1, int q2) {
    validate_q(q1);
    validate_q(q2);
    const Entry one{"U", {.one = 1}};
    const Entry area{"U dm∧dℓ", {.dmdl = 1}};
    const Entry dm{"U dm", {.dm = 1}};
    const Entry diag{"U(dm + dℓ)", {.dm = 1, .dl = 1}};
    const Entry anti{"U(dℓ - dm)", {.dm = -1, .dl = 1}};
    auto slope = [](int pq, bool plus) {
        return Entry{slope_form(pq, plus), {.dm = 1, .dl = plus ? double(pq) : -double(pq)}};
    };

    const std::string su3_trivial = "su(3) trivial end";
    const std::string su3_twisted = "su(3) irreducible end";
    const std::string k1_start = "su(2) knot 1 / solid torus 2, path start";
    const std::string k2_start = "su(2) solid torus 1 / knot 2, path start";
    const std::string k1_end = "su(2) knot 1 / solid torus 2, path end";
    const std::string k2_end = "su(2) solid torus 1 / knot 2, path end";

    std::vector<TripleTerm> out;
    // diagonal part of su(3) is two-dimensional; U′, U″ are its lines
    out.push_back(eval_triple(su3_trivial, 2, "U", area, area, one));
    out.push_back(eval_triple(su3_trivial, 2, "U", dm, dm, dm));
    out.push_back(eval_triple(su3_twisted, 1, "U′", area, area, one));
    out.push_back(eval_triple(su3_twisted, 1, "U″", one, area, area));
    for (int q : {q1, q2}) out.push_back(eval_triple(su3_twisted, 2, "U", slope(2 * q, true), dm, slope(2 * q, false)));
    if (q1 == q2) out.pop_back();

    out.push_back(eval_triple(k1_start, 1, "U", area, area, one));
    out.push_back(eval_triple(k1_start, 1, "U", dm, dm, diag));
    out.push_back(eval_triple(k2_start, 1, "U", area, area, one));
    out.push_back(eval_triple(k2_start, 1, "U", anti, dm, dm));
    out.push_back(eval_triple(k1_end, 1, "U", one, area, area));
    out.push_back(eval_triple(k1_end, 1, "U", slope(2 * q1, true), dm, diag));
    out.push_back(eval_triple(k2_end, 1, "U", area, area, area));
    out.push_back(eval_triple(k2_end, 1, "U", anti, dm, slope(2 * q2, false)));
    return out;
}

bool ParityReport::consistent() const {
    return all_even && forced_terms_zero && complex_flow_even && u2_irreducible_kernel_constant &&
           triple_parity == 0;
}

ParityReport parity_assembly(int q1, int q2) {
    ParityReport r;
    r.q1 = q1;
    r.q2 = q2;
    r.terms = boundary_triple_terms(q1, q2);
    r.all_even = true;
    r.forced_terms_zero = true;
    int sum = 0;
    for (const auto& t : r.terms) {
        if (t.value % 2 != 0) r.all_even = false;
        if (t.identity_forced && t.value != 0) r.forced_terms_zero = false;
        sum += t.value;
    }
    r.triple_parity = ((sum % 2) + 2) % 2;

    // off-diagonal channels at holonomies met along the twisted paths
    r.complex_flow_even = true;
    for (const auto& hp : {HolonomyParam::make({0, 0, 0}, {0, 0, 0}),
                           HolonomyParam::make({0.5, -0.5, 0}, {0.5, -0.5, 0}),
                           HolonomyParam::make({0.3, -0.1, -0.2}, {0.15, 0.05, -0.2})})
        r.complex_flow_even = r.complex_flow_even && complex_channel_multiplicities_even(hp, 4);

    // the u(2) limiting space meets L̂⁺ in the fixed line U″ dm∧dℓ along each arc
    r.u2_irreducible_kernel_constant = true;
    const ModelSpace model(2);
    const Lagrangian lplus(model.symplectic(), l_hat_plus(model).basis);
    for (int q : {q1, q2})
        for (int k = 1; k <= q - 2; k += 2)
            for (int i = 1; i < 10; ++i) {
                const auto lv = limiting_values(klassen_rep(q, k, i / 10.0));
                if (lv.rep_case != RepCase::irreducible || lv.basis.rows() != model.dim()) {
                    r.u2_irreducible_kernel_constant = false;
                    continue;
                }
                const Lagrangian la(model.symplectic(), lv.basis);
                if (intersection_dim(la, lplus) != 1) r.u2_irreducible_kernel_constant = false;
            }
    return r;
}

}  // namespace casson
