#include "inob/bodies.hpp"

#include "inob/toric.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace inob {
namespace {

QVector v(std::initializer_list<Rat> xs) { return make_vector(xs); }

Rat product(const std::vector<Rat>& d) {
    Rat p = 1;
    for (const Rat& x : d) p *= x;
    return p;
}

std::string rats_to_string(const std::vector<Rat>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += to_string(xs[i]);
    }
    return out + ")";
}

std::string residual(const Rat& got, const Rat& expected) {
    return to_string(got) + " vs expected " + to_string(expected) + " (residual " + to_string(got - expected) + ")";
}

std::string decimal(const Rat& x) {
    std::ostringstream out;
    out << std::setprecision(12) << x.convert_to<double>();
    return out.str();
}

// First flag from the seed whose point avoids every coordinate hyperplane.
LinearFlag generic_flag(int n, std::uint64_t seed) {
    if (n == 1) return LinearFlag::identity(1);
    Rng rng(seed);
    for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
        LinearFlag flag = LinearFlag::random(n, rng);
        const QVector p = flag.point();
        if (std::all_of(p.begin(), p.end(), [](const Rat& x) { return x != 0; })) return flag;
    }
    throw GenericityError("generic_flag: no flag within the resample budget");
}

void require_positive(const std::vector<Rat>& d, const char* who) {
    for (const Rat& x : d) {
        if (x <= 0) throw std::invalid_argument(std::string(who) + ": degrees must be positive");
    }
}

}  // namespace

BoxProductClass::BoxProductClass(std::vector<Rat> d) : degrees(std::move(d)) {
    if (degrees.empty()) throw std::invalid_argument("BoxProductClass: need at least one degree");
    require_positive(degrees, "BoxProductClass");
}

bool BoxProductClass::sorted() const { return std::is_sorted(degrees.rbegin(), degrees.rend()); }

Rat BoxProductClass::volume() const { return product(degrees); }

CandidateBody simplex_body(int n) {
    if (n < 1) throw std::invalid_argument("simplex_body: n must be >= 1");
    std::vector<QVector> pts{zero_vector(n)};
    for (int k = 1; k <= n; ++k) {
        QVector p = zero_vector(n);
        p[0] = k;
        if (k < n) p[k] = k;
        pts.push_back(p);
    }
    return {hull(pts), "simplex", std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)), {}};
}

CandidateBody trapezoid_body(const Rat& d1, const Rat& d2) {
    if (!(d1 >= d2 && d2 > 0)) throw std::invalid_argument("trapezoid_body: need d1 >= d2 > 0");
    return {hull({v({0, 0}), v({d2, d2}), v({d1 + d2, 0}), v({d1, d2})}), "trapezoid", {d1, d2}, {}};
}

CandidateBody threefold_body(const Rat& d1, const Rat& d2, const Rat& d3) {
    if (!(d1 >= d2 && d2 >= d3 && d3 > 0)) throw std::invalid_argument("threefold_body: need d1 >= d2 >= d3 > 0");
    std::vector<QVector> pts = threefold_vertices(d1, d2, d3);
    pts.push_back(v({0, 0, 0}));
    pts.push_back(v({d1 + d2 + d3, 0, 0}));
    CandidateBody out{hull(pts), "threefold", {d1, d2, d3}, {}};

    const QVector a = v({d3, d3, 0});
    const QVector b = v({2 * d3, 0, 2 * d3});
    const QVector c = v({3 * d3, 0, 0});
    const QVector a2 = v({d1 + d2 - d3, d3, 0});
    const QVector b2 = v({d1 + d2, 0, 2 * d3});
    const QVector c2 = v({d1 + d2 + d3, 0, 0});
    out.pieces.push_back(hull({v({0, 0, 0}), a, b, c}));
    out.pieces.push_back(hull({a, b, c, a2, b2, c2}));
    out.pieces.push_back(hull({b, b2, v({d1 + d3, 0, d2 + d3}), v({d2 + d3, 0, d2 + d3}), a, a2, v({d1, d3, d2 - d3}),
                               v({d2, d3, d2 - d3})}));
    return out;
}

std::vector<Rat> threefold_piece_volumes(const Rat& d1, const Rat& d2, const Rat& d3) {
    return {d3 * d3 * d3, (d1 + d2 - 2 * d3) * d3 * d3, (d1 - d3) * (d2 - d3) * d3};
}

bool is_pseff_product(const std::vector<Rat>& d) {
    return std::all_of(d.begin(), d.end(), [](const Rat& x) { return x >= 0; });
}

bool is_pseff_blowup(const std::vector<Rat>& c, const Rat& f) {
    if (f < 0) throw std::invalid_argument("is_pseff_blowup: the exceptional coefficient f must be >= 0");
    Rat total = 0;
    for (const Rat& x : c) total += x;
    return is_pseff_product(c) && f <= total;
}

Rat width(const std::vector<Rat>& d) {
    require_positive(d, "width");
    Rat total = 0;
    for (const Rat& x : d) total += x;
    return total;
}

std::vector<MembershipCertificate> default_certificates(const CandidateBody& body, std::uint64_t seed) {
    const auto& d = body.degrees;
    const int n = static_cast<int>(d.size());
    std::vector<MembershipCertificate> out;
    if (body.provenance == "simplex") {
        for (int k = 1; k <= n; ++k) out.push_back(construct_Qd(n, k, seed).certificate);
        out.insert(out.begin(), origin_certificate(d, out.back().flag, seed));
    } else if (body.provenance == "trapezoid") {
        const LinearFlag flag = generic_flag(2, seed);
        const HomoPoly y2 = HomoPoly::linear_form(flag.coordinate_form(1));
        out.push_back(origin_certificate(d, flag, seed));
        WeightedDivisor top(2);
        top.add(d[1], y2);
        out.push_back(certify(top, d, d[1], flag, seed));
        top.add(d[0] - d[1], HomoPoly::variable(2, 0));
        out.push_back(certify(top, d, d[0], flag, seed));
        out.push_back(corner_certificate(d, flag, seed));
    } else if (body.provenance == "threefold") {
        out = threefold_witnesses(d[0], d[1], d[2], seed);
        const LinearFlag flag = out.front().flag;
        out.insert(out.begin(), origin_certificate(d, flag, seed));
        out.push_back(corner_certificate(d, flag, seed));
    } else {
        throw std::invalid_argument("default_certificates: unknown body '" + body.provenance + "'");
    }
    return out;
}

std::vector<Rat> default_samples(const std::vector<Rat>& degrees) { return sample_grid(degrees); }

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

VerificationReport verify_body(const CandidateBody& candidate, const std::vector<Rat>& samples,
                               const std::vector<MembershipCertificate>& certificates) {
    const Polytope& body = candidate.body;
    const auto& d = candidate.degrees;
    const int n = static_cast<int>(d.size());
    if (body.dim() != n) throw std::invalid_argument("verify_body: body dimension differs from the number of degrees");
    VerificationReport report;

    {
        const Rat got = volume(body);
        const Rat expected = product(d);
        report.checks.push_back({"volume", got == expected, residual(got, expected)});
    }

    {
        std::vector<Rat> ts(samples);
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        const Rat total = width(d);
        Check check{"slice volumes", true, ""};
        std::size_t compared = 0;
        for (const Rat& t : ts) {
            if (t < 0 || t > total) {
                check.pass = false;
                check.detail += "t = " + to_string(t) + " lies outside [0, " + to_string(total) + "]; ";
                continue;
            }
            const Rat got = volume(slice(body, 0, t));
            // For n = 1 the slice lives in R^0, where a nonempty set has volume 1.
            const Rat expected = n == 1 ? Rat(1) : slice_volume(ToricSliceDivisor(d, t));
            ++compared;
            if (got != expected) {
                check.pass = false;
                check.detail += "t = " + to_string(t) + ": " + residual(got, expected) + "; ";
            }
        }
        if (check.pass) check.detail = std::to_string(compared) + " samples agree";
        report.checks.push_back(check);
    }

    {
        Check check{"certificates", true, ""};
        for (std::size_t k = 0; k < certificates.size(); ++k) {
            const MembershipCertificate& cert = certificates[k];
            std::string problem;
            if (cert.degrees != d) {
                problem = "degrees " + rats_to_string(cert.degrees) + " differ from the body's";
            } else if (!replay(cert)) {
                problem = "does not replay";
            } else if (!body.contains(cert.point)) {
                Rat worst = 0;
                for (const Halfspace& h : body.halfspaces()) worst = std::min(worst, h.slack(cert.point));
                problem = "point " + to_string(cert.point) + " outside the body (slack " + to_string(worst) + ")";
            }
            if (!problem.empty()) {
                check.pass = false;
                check.detail += "certificate " + std::to_string(k) + ": " + problem + "; ";
            }
        }
        if (check.pass) check.detail = std::to_string(certificates.size()) + " certificates inside";
        report.checks.push_back(check);
    }

    {
        std::set<Rat> heights;
        for (const QVector& p : body.vertices()) heights.insert(p[0]);
        Check check{"subset sums", true, ""};
        for (const Rat& s : branch_points(d)) {
            if (!heights.count(s)) {
                check.pass = false;
                check.detail += "no vertex at nu1 = " + to_string(s) + "; ";
            }
        }
        if (check.pass) check.detail = std::to_string(branch_points(d).size()) + " subset sums are vertex heights";
        report.checks.push_back(check);
    }

    {
        const auto [lo, hi] = projection_interval(body, 0);
        const Rat w = width(d);
        const bool ok = lo == 0 && hi == w;
        report.checks.push_back({"projection", ok,
                                 "[" + to_string(lo) + ", " + to_string(hi) + "] vs expected [0, " + to_string(w) + "]"});
    }

    if (!candidate.pieces.empty()) {
        const auto expected = threefold_piece_volumes(d[0], d[1], d[2]);
        Check check{"decomposition", true, ""};
        Rat sum = 0;
        for (std::size_t k = 0; k < candidate.pieces.size(); ++k) {
            const Rat got = volume(candidate.pieces[k]);
            sum += got;
            if (got != expected[k]) {
                check.pass = false;
                check.detail += "piece " + std::to_string(k + 1) + ": " + residual(got, expected[k]) + "; ";
            }
            for (const QVector& p : candidate.pieces[k].vertices()) {
                if (!body.contains(p)) {
                    check.pass = false;
                    check.detail += "piece " + std::to_string(k + 1) + " leaves the body at " + to_string(p) + "; ";
                }
            }
        }
        const Rat total = volume(body);
        if (sum != total) {
            check.pass = false;
            check.detail += "pieces sum to " + residual(sum, total) + "; ";
        }
        if (check.pass) check.detail = "pieces " + rats_to_string(expected) + " sum to " + to_string(total);
        report.checks.push_back(check);
    }
    return report;
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : report.checks) {
        checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    }
    return {{"passed", report.passed()}, {"checks", checks}};
}

nlohmann::json to_json(const CandidateBody& body) {
    nlohmann::json j;
    j["body"] = body.provenance;
    j["degrees"] = nlohmann::json::array();
    for (const Rat& x : body.degrees) j["degrees"].push_back(to_string(x));
    j["polytope"] = to_json(body.body);
    j["volume"] = to_string(volume(body.body));
    if (!body.pieces.empty()) {
        j["pieces"] = nlohmann::json::array();
        for (const Polytope& p : body.pieces) j["pieces"].push_back(to_string(volume(p)));
    }
    return j;
}

std::string to_off(const CandidateBody& body) {
    const Polytope& p = body.body;
    if (p.dim() != 3 || p.affine_dim() != 3) throw std::invalid_argument("to_off: needs a full 3-dimensional body");
    std::vector<std::array<std::size_t, 3>> triangles;
    for (const auto& facet : oriented_facets_3d(p)) {
        for (std::size_t k = 1; k + 1 < facet.size(); ++k) triangles.push_back({facet[0], facet[k], facet[k + 1]});
    }
    std::ostringstream out;
    out << "OFF\n" << p.vertices().size() << ' ' << triangles.size() << " 0\n";
    for (const QVector& x : p.vertices()) out << decimal(x[0]) << ' ' << decimal(x[1]) << ' ' << decimal(x[2]) << '\n';
    for (const auto& t : triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return out.str();
}

std::string to_svg(const CandidateBody& body) {
    const Polytope& p = body.body;
    if (p.dim() != 2 || p.affine_dim() != 2) throw std::invalid_argument("to_svg: needs a full 2-dimensional body");
    const auto [xlo, xhi] = projection_interval(p, 0);
    const auto [ylo, yhi] = projection_interval(p, 1);
    const Rat pad = std::max(Rat(xhi - xlo), Rat(yhi - ylo)) / 20;
    std::ostringstream out;
    // SVG's y axis points down, so nu2 is drawn negated.
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << decimal(xlo - pad) << ' ' << decimal(-yhi - pad)
        << ' ' << decimal(xhi - xlo + 2 * pad) << ' ' << decimal(yhi - ylo + 2 * pad) << "\">\n";
    out << "  <polygon points=\"";
    const auto order = ccw_polygon(p);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const QVector& x = p.vertices()[order[k]];
        out << (k ? " " : "") << decimal(x[0]) << ',' << decimal(-x[1]);
    }
    out << "\" fill=\"#9ecae1\" stroke=\"#08519c\" stroke-width=\"" << decimal(pad / 4) << "\"/>\n";
    for (std::size_t k = 0; k < order.size(); ++k) {
        const QVector& x = p.vertices()[order[k]];
        out << "  <circle cx=\"" << decimal(x[0]) << "\" cy=\"" << decimal(-x[1]) << "\" r=\"" << decimal(pad / 2)
            << "\" fill=\"#08519c\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace inob
