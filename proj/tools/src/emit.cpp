#include "casson/cli/emit.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "casson/knotrep.hpp"

namespace casson::cli {

using nlohmann::json;

namespace {

json matrix_json(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

Mat matrix_from_json(const json& rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    Mat m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = cplx(rows[i][j][0].get<double>(), rows[i][j][1].get<double>());
    return m;
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json to_json(const RunMeta& meta) {
    return {{"tool", "casson"},
            {"version", "0.1.0"},
            {"command", meta.command},
            {"seed", meta.seed},
            {"tol_rank", meta.tol_rank},
            {"tol_mat", meta.tol_mat}};
}

json to_json(const IsolatedRep& rep) {
    json images = json::array();
    for (const auto& m : rep.images) images.push_back(matrix_json(m));
    return {{"q1", rep.q1},
            {"q2", rep.q2},
            {"k1", rep.k1},
            {"k2", rep.k2},
            {"theta1", to_string(rep.theta1)},
            {"theta2", to_string(rep.theta2)},
            {"s1", rep.s1},
            {"s2", rep.s2},
            {"gluing", {rep.gluing.e1, rep.gluing.e2}},
            {"images", images}};
}

IsolatedRep isolated_from_json(const json& j) {
    IsolatedRep rep;
    rep.q1 = j.at("q1").get<int>();
    rep.q2 = j.at("q2").get<int>();
    rep.k1 = j.at("k1").get<int>();
    rep.k2 = j.at("k2").get<int>();
    rep.theta1 = parse_rational(j.at("theta1").get<std::string>());
    rep.theta2 = parse_rational(j.at("theta2").get<std::string>());
    rep.s1 = j.at("s1").get<double>();
    rep.s2 = j.at("s2").get<double>();
    rep.gluing = {j.at("gluing")[0].get<int>(), j.at("gluing")[1].get<int>()};
    for (std::size_t i = 0; i < 4; ++i) rep.images[i] = matrix_from_json(j.at("images")[i]);
    return rep;
}

bool identical(const IsolatedRep& a, const IsolatedRep& b) {
    if (a.q1 != b.q1 || a.q2 != b.q2 || a.k1 != b.k1 || a.k2 != b.k2) return false;
    if (a.theta1 != b.theta1 || a.theta2 != b.theta2 || a.s1 != b.s1 || a.s2 != b.s2) return false;
    if (!(a.gluing == b.gluing)) return false;
    for (std::size_t i = 0; i < 4; ++i)
        if (a.images[i] != b.images[i]) return false;
    return true;
}

json catalog_json(const EnumerationResult& result, const RunMeta& meta) {
    json reps = json::array();
    for (const auto& r : result.catalog) reps.push_back(to_json(r));
    json rejected = json::array();
    for (const auto& r : result.rejected)
        rejected.push_back({{"k1", r.k1},
                            {"k2", r.k2},
                            {"point_index", r.point_index},
                            {"gluing", {r.gluing.e1, r.gluing.e2}},
                            {"boundary_residual", r.boundary_residual},
                            {"reason", r.reason}});
    const long formula = (static_cast<long>(result.q1) * result.q1 - 1) * (static_cast<long>(result.q2) * result.q2 - 1) / 4;
    return {{"meta", to_json(meta)},
            {"q1", result.q1},
            {"q2", result.q2},
            {"summary",
             {{"intersection_points", result.point_count},
              {"catalog_size", result.catalog.size()},
              {"distinct_classes", result.distinct_classes},
              {"rejected_gluings", result.rejected.size()},
              {"closed_formula", formula}}},
            {"catalog", reps},
            {"rejected", rejected}};
}

std::vector<IsolatedRep> catalog_from_json(const json& j) {
    std::vector<IsolatedRep> out;
    for (const auto& e : j.at("catalog")) out.push_back(isolated_from_json(e));
    return out;
}

std::string catalog_csv(const EnumerationResult& result) {
    std::ostringstream os;
    os << "k1,k2,theta1,theta2,s1,s2,e1,e2,relation_residual,boundary_residual\n";
    for (const auto& r : result.catalog)
        os << r.k1 << ',' << r.k2 << ',' << to_string(r.theta1) << ',' << to_string(r.theta2) << ','
           << format_double(r.s1) << ',' << format_double(r.s2) << ',' << r.gluing.e1 << ',' << r.gluing.e2 << ','
           << format_double(r.relation_residual()) << ',' << format_double(r.boundary_residual()) << '\n';
    return os.str();
}

std::string cohomology_csv(const std::vector<CohomologyRow>& rows) {
    std::ostringstream os;
    os << "case,p,q,h0,h1,W_A\n";
    for (const auto& r : rows)
        os << to_string(r.dims.rep_case) << ',' << r.dims.p << ',' << r.dims.q << ',' << r.dims.h0 << ','
           << r.dims.h1 << ',' << r.dims.w_a << '\n';
    return os.str();
}

std::string spectrum_csv(const std::vector<FourierModeBlock>& blocks) {
    std::ostringstream os;
    os << "channel,m,l,eig1,eig2,eig3,eig4\n";
    for (const auto& b : blocks) {
        if (b.channel.diagonal())
            os << 'U' << b.channel.i + 1;
        else
            os << 'C' << b.channel.i + 1 << b.channel.j + 1;
        os << ',' << b.m << ',' << b.l;
        for (int k = 0; k < 4; ++k) os << ',' << format_double(b.eigenvalues(k));
        os << '\n';
    }
    return os.str();
}

std::string pillowcase_svg(int q) {
    validate_q(q);
    constexpr double scale = 600.0;
    constexpr double pad = 20.0;
    auto px = [&](double u) { return fixed(pad + u * scale); };
    auto py = [&](double v) { return fixed(pad + (1.0 - v) * scale); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(2 * pad + 0.5 * scale) << "\" height=\""
       << fixed(2 * pad + scale) << "\">\n";
    os << "<rect x=\"" << px(0) << "\" y=\"" << py(1) << "\" width=\"" << fixed(0.5 * scale) << "\" height=\""
       << fixed(scale) << "\" fill=\"none\" stroke=\"#888\"/>\n";
    os << "<line class=\"abelian\" x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0.5) << "\" y2=\""
       << py(0) << "\" stroke=\"#000\" stroke-width=\"3\"/>\n";
    for (int k = 1; k <= q - 2; k += 2) {
        os << "<g class=\"arc\" data-k=\"" << k << "\" stroke=\"#c33\" fill=\"none\">\n";
        std::vector<PillowcasePoint> pts;
        for (int i = 0; i < 256; ++i) pts.push_back(boundary_pillowcase(klassen_rep(q, k, i / 255.0)));
        // v lives on a circle: where the arc wraps, end at one edge and restart on the other
        std::vector<std::string> poly;
        auto flush = [&] {
            if (poly.size() >= 2) {
                os << "<polyline points=\"";
                for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? " " : "") << poly[i];
                os << "\"/>\n";
            }
            poly.clear();
        };
        auto point = [&](double u, double v) {
            const std::string p = px(u) + ',' + py(v);
            if (poly.empty() || poly.back() != p) poly.push_back(p);
        };
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i > 0 && std::fabs(pts[i].v - pts[i - 1].v) > 0.5) {
                const auto& a = pts[i - 1];
                const auto& b = pts[i];
                const double edge = b.v > a.v ? 0.0 : 1.0;
                const double bv = b.v > a.v ? b.v - 1.0 : b.v + 1.0;
                const double t = a.v == bv ? 0.0 : (a.v - edge) / (a.v - bv);
                const double u = a.u + t * (b.u - a.u);
                point(u, edge);
                flush();
                point(u, 1.0 - edge);
            }
            point(pts[i].u, pts[i].v);
        }
        flush();
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace casson::cli
