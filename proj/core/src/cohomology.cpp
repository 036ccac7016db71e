#include "casson/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "casson/maslov.hpp"
#include "casson/splice.hpp"

namespace casson {

namespace {

constexpr double kPi = std::numbers::pi;

RMat ad_minus_one(const Mat& g) {
    const RMat a = ad_matrix(g);
    return a - RMat::Identity(a.rows(), a.cols());
}

RMat stack(const RMat& a, const RMat& b) {
    RMat s(a.rows() + b.rows(), a.cols());
    s << a, b;
    return s;
}

int nullity(const RMat& a, double rank_tol) { return static_cast<int>(a.cols()) - numeric_rank(a, rank_tol); }

// Σ_{i<k} Ad_g^i
RMat ad_power_sum(const Mat& g, int k) {
    const auto n = g.rows() * g.rows();
    RMat s = RMat::Zero(n, n);
    for (int i = 0; i < k; ++i) s += ad_matrix(unitary_power(g, i));
    return s;
}

void require_relation(const KnotGroupRep& rep) {
    if (rep.n() != 2) throw ValidationError("cohomology is implemented for 2×2 representations");
    const double r = rep.relation_residual();
    if (r > 1e-8) {
        std::ostringstream os;
        os << "relation residual " << r << " too large for cohomology";
        throw ValidationError(os.str());
    }
}

// Commutant dimension, refusing to decide when a singular value sits within two decades of the cutoff.
int commutant_checked(std::initializer_list<Mat> set, double rank_tol, const char* what) {
    RMat sys(0, 4);
    for (const Mat& g : set) {
        const RMat block = ad_minus_one(g);
        RMat next(sys.rows() + block.rows(), 4);
        next << sys, block;
        sys = next;
    }
    Eigen::JacobiSVD<RMat> svd(sys);
    const auto& sv = svd.singularValues();
    const double cut = rank_cutoff(sv(0), rank_tol);
    int zero = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        // values under 1e-11 are rounding noise at these matrix sizes
        if (sv(k) > std::max(cut * 1e-2, 1e-11) && sv(k) < cut * 1e2) {
            std::ostringstream os;
            os << "ambiguous case for " << what << ": singular value " << sv(k) << " near cutoff " << cut;
            throw ValidationError(os.str());
        }
        if (sv(k) <= cut) ++zero;
    }
    return zero + static_cast<int>(4 - sv.size());
}

RMat coeff_line(std::initializer_list<double> c) {
    RMat v(static_cast<Eigen::Index>(c.size()), 1);
    Eigen::Index i = 0;
    for (double x : c) v(i++, 0) = x;
    return v.normalized();
}

}  // namespace

const char* to_string(RepCase c) {
    switch (c) {
        case RepCase::central: return "central";
        case RepCase::abelian_generic: return "abelian-generic";
        case RepCase::bifurcation: return "abelian-bifurcation";
        case RepCase::irreducible: return "irreducible";
    }
    return "?";
}

RMat ad_matrix(const Mat& g) {
    const int n = static_cast<int>(g.rows());
    const auto basis = u_basis(n);
    RMat a(n * n, n * n);
    for (int k = 0; k < n * n; ++k) a.col(k) = u_coords(g * basis[k] * g.adjoint());
    return a;
}

RepCase classify_case(const KnotGroupRep& rep, double rank_tol) {
    require_relation(rep);
    const Mat& x = rep.image_x().mat();
    const Mat& y = rep.image_y().mat();
    const int c = commutant_checked({x, y}, rank_tol, "⟨x, y⟩");
    if (c == 4) return RepCase::central;
    if (c == 1) return RepCase::irreducible;
    if (c != 2) throw ValidationError("unexpected commutant dimension " + std::to_string(c));
    const Mat xp = unitary_power(x, rep.presentation().p);
    return commutant_checked({xp}, rank_tol, "x^p") == 4 ? RepCase::bifurcation : RepCase::abelian_generic;
}

int h0_dim(const KnotGroupRep& rep, double rank_tol) {
    require_relation(rep);
    return nullity(stack(ad_minus_one(rep.image_x().mat()), ad_minus_one(rep.image_y().mat())), rank_tol);
}

RMat cocycle_basis(const KnotGroupRep& rep, double rank_tol) {
    require_relation(rep);
    const auto& pres = rep.presentation();
    RMat c(4, 8);
    c << ad_power_sum(rep.image_x().mat(), pres.p), -ad_power_sum(rep.image_y().mat(), pres.q);
    return null_space(c, rank_tol);
}

int h1_dim(const KnotGroupRep& rep, double rank_tol) {
    const int z1 = static_cast<int>(cocycle_basis(rep, rank_tol).cols());
    return z1 - (4 - h0_dim(rep, rank_tol));
}

RMat fox_matrix(const Word& w, const std::vector<Mat>& images) {
    const auto n = images.at(0).rows();
    const auto d = n * n;
    RMat r = RMat::Zero(d, d * static_cast<Eigen::Index>(images.size()));
    Mat prefix = Mat::Identity(n, n);
    int steps = 0;
    for (const auto& [gen, e] : w) {
        const Mat& g = images.at(gen);
        const Mat ginv = g.adjoint();
        for (long i = 0; i < std::labs(e); ++i) {
            if (e > 0) {
                r.middleCols(gen * d, d) += ad_matrix(prefix);
                prefix = prefix * g;
            } else {
                prefix = prefix * ginv;
                r.middleCols(gen * d, d) -= ad_matrix(prefix);
            }
            if (++steps % 8 == 0) prefix = reunitarize(prefix);
        }
    }
    return r;
}

std::pair<int, int> torus_h_dims(const Mat& mu, const Mat& lambda, double rank_tol) {
    if ((mu * lambda - lambda * mu).norm() > 1e-8)
        throw ValidationError("torus holonomies do not commute");
    const RMat am = ad_minus_one(mu);
    const RMat al = ad_minus_one(lambda);
    const auto d = am.rows();
    const int h0 = nullity(stack(am, al), rank_tol);
    // (Ad_μ − 1)ζ(λ) = (Ad_λ − 1)ζ(μ)
    RMat c(d, 2 * d);
    c << -al, am;
    const int z1 = nullity(c, rank_tol);
    return {h0, z1 - (static_cast<int>(d) - h0)};
}

int restriction_kernel_dim(const KnotGroupRep& rep, double rank_tol) {
    const RMat zb = cocycle_basis(rep, rank_tol);
    const std::vector<Mat> images{rep.image_x().mat(), rep.image_y().mat()};
    const auto& pres = rep.presentation();
    const RMat r = stack(fox_matrix(pres.meridian, images), fox_matrix(pres.longitude, images));
    const RMat bt = stack(ad_minus_one(rep.meridian_image()), ad_minus_one(rep.longitude_image()));

    // cocycles whose restriction is a torus coboundary, modulo the knot's own coboundaries
    RMat sys(8, zb.cols() + 4);
    sys << r * zb, -bt;
    const int restricted_exact = nullity(sys, rank_tol) - nullity(bt, rank_tol);
    return restricted_exact - (4 - h0_dim(rep, rank_tol));
}

CohomologyDims cohomology_dims(const KnotGroupRep& rep, double rank_tol) {
    CohomologyDims d;
    d.rep_case = classify_case(rep, rank_tol);
    d.p = rep.presentation().p;
    d.q = rep.presentation().q;
    d.h0 = h0_dim(rep, rank_tol);
    d.h1 = h1_dim(rep, rank_tol);
    d.w_a = restriction_kernel_dim(rep, rank_tol);
    return d;
}

CohomologyDims expected_dims(RepCase c, int p, int q) {
    CohomologyDims d;
    d.rep_case = c;
    d.p = p;
    d.q = q;
    switch (c) {
        case RepCase::central: d.h0 = 4, d.h1 = 4, d.w_a = 0; break;
        case RepCase::abelian_generic: d.h0 = 2, d.h1 = 2, d.w_a = 0; break;
        case RepCase::bifurcation: d.h0 = 2, d.h1 = 4, d.w_a = 2; break;
        case RepCase::irreducible: d.h0 = 1, d.h1 = 2, d.w_a = 0; break;
    }
    return d;
}

LimitingValues limiting_values(const KnotGroupRep& rep, double rank_tol) {
    LimitingValues lv;
    lv.rep_case = classify_case(rep, rank_tol);
    const int pq = rep.presentation().p * rep.presentation().q;
    if (lv.rep_case == RepCase::central) {
        lv.coeff_dim = 4;
        const ModelSpace model(4);
        const RMat c = RMat::Identity(4, 4);
        lv.basis = named_span(model, {{c, {.one = 1}}, {c, {.dm = 1}}}, "").basis;
        lv.description = "U ⊕ Q ⊕ U dm ⊕ Q dm";
        return lv;
    }
    lv.coeff_dim = 2;
    const ModelSpace model(2);
    const RMat u = RMat::Identity(2, 2);
    if (lv.rep_case == RepCase::irreducible) {
        lv.basis = named_span(model,
                              {{coeff_line({1, 1}), {.one = 1}},
                               {u, {.dm = 1, .dl = -static_cast<double>(pq)}},
                               {coeff_line({1, -1}), {.dmdl = 1}}},
                              "")
                       .basis;
        lv.description = "U′ ⊕ U(dm - " + std::to_string(pq) + "dℓ) ⊕ U″ dm∧dℓ";
    } else {
        lv.basis = named_span(model, {{u, {.one = 1}}, {u, {.dm = 1}}}, "").basis;
        lv.description = "U ⊕ U dm";
    }
    return lv;
}

LimitingValues solid_torus_limiting_values(int n, const RVec& alpha, const RVec& beta, bool central) {
    if (n < 2 || alpha.size() != n || beta.size() != n) throw ValidationError("holonomy vectors must have length n");
    if (std::fabs(alpha.sum()) > 1e-12 || std::fabs(beta.sum()) > 1e-12)
        throw ValidationError("holonomy vectors must sum to zero");
    auto integral = [](double v) { return std::fabs(v - std::round(v)) < 1e-12; };
    for (int i = 0; i < n; ++i)
        if (!integral(alpha(i) - beta(i))) throw ValidationError("holonomy is off the diagonal of the solid torus image");
    int channels = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (integral(alpha(i) - alpha(j)) && integral(beta(i) - beta(j))) ++channels;
    const bool is_central = channels == n * (n - 1) / 2;
    if (is_central != central) throw ValidationError("central flag disagrees with the holonomy parameters");

    LimitingValues lv;
    lv.rep_case = central ? RepCase::central : RepCase::abelian_generic;
    lv.coeff_dim = (n - 1) + (central ? 2 * channels : 0);
    const ModelSpace model(lv.coeff_dim);
    const RMat c = RMat::Identity(lv.coeff_dim, lv.coeff_dim);
    lv.basis = named_span(model, {{c, {.one = 1}}, {c, {.dm = 1, .dl = 1}}}, "").basis;
    lv.description = central ? "U ⊕ Q ⊕ U(dm + dℓ) ⊕ Q(dm + dℓ)" : "U ⊕ U(dm + dℓ)";
    return lv;
}

KnotGroupRep sample_rep(RepCase c, int q, std::mt19937_64& rng) {
    validate_q(q);
    constexpr int p = 2;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto pres = TorusKnotPresentation::make(p, q);
    auto diag = [](double a, double b) {
        Mat m = Mat::Zero(2, 2);
        m(0, 0) = std::polar(1.0, 2 * kPi * a);
        m(1, 1) = std::polar(1.0, 2 * kPi * b);
        return m;
    };
    Mat x, y;
    switch (c) {
        case RepCase::central: {
            const double phi = unit(rng);
            x = diag(q * phi, q * phi);
            y = diag(p * phi, p * phi);
            break;
        }
        case RepCase::abelian_generic:
        case RepCase::bifurcation: {
            const double t1 = unit(rng);
            double t2;
            if (c == RepCase::bifurcation) {
                // pq(t₁ − t₂) ∈ ℤ with neither p nor q dividing the offset
                std::vector<int> js;
                for (int j = 1; j < p * q; ++j)
                    if (j % p != 0 && j % q != 0) js.push_back(j);
                t2 = t1 + js[std::uniform_int_distribution<std::size_t>(0, js.size() - 1)(rng)] /
                              static_cast<double>(p * q);
            } else {
                double off;
                do {
                    off = unit(rng);
                } while (std::fabs(p * q * off - std::round(p * q * off)) < 0.02);
                t2 = t1 + off;
            }
            x = diag(q * t1, q * t2);
            y = diag(p * t1, p * t2);
            break;
        }
        case RepCase::irreducible: {
            const int k = 1 + 2 * std::uniform_int_distribution<int>(0, (q - 3) / 2)(rng);
            const double s = 0.02 + 0.96 * unit(rng);
            const auto beta = klassen_rep(q, k, s);
            const double phi = unit(rng);
            x = std::polar(1.0, 2 * kPi * q * phi) * beta.image_x().mat();
            y = std::polar(1.0, 2 * kPi * p * phi) * beta.image_y().mat();
            break;
        }
    }
    const Mat g = haar_unitary(2, rng);
    return KnotGroupRep(pres, UnitaryMatrix(g * x * g.adjoint(), GroupTag::U2),
                        UnitaryMatrix(g * y * g.adjoint(), GroupTag::U2));
}

}  // namespace casson
