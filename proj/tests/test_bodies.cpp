#include "inob/bodies.hpp"
#include "inob/toric.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace inob;
using inob::testing::Gen;

namespace {

QVector pt(std::initializer_list<Rat> xs) { return make_vector(xs); }

Rat shoelace(const Polytope& p) {
    const auto order = ccw_polygon(p);
    Rat twice = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const QVector& a = p.vertices()[order[i]];
        const QVector& b = p.vertices()[order[(i + 1) % order.size()]];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return twice / 2;
}

const Check& find(const VerificationReport& r, const std::string& name) {
    for (const Check& c : r.checks) {
        if (c.name == name) return c;
    }
    throw std::runtime_error("no check named " + name);
}

}  // namespace

TEST_CASE("simplex bodies", "[bodies]") {
    for (int n = 1; n <= 6; ++n) {
        const CandidateBody b = simplex_body(n);
        CHECK(volume(b.body) == 1);
        CHECK(b.body.vertices().size() == static_cast<std::size_t>(n + 1));
    }
    CHECK(same_set(simplex_body(1).body, hull({pt({0}), pt({1})})));
    CHECK(same_set(simplex_body(2).body, hull({pt({0, 0}), pt({1, 1}), pt({2, 0})})));
    CHECK(same_set(simplex_body(3).body, hull({pt({0, 0, 0}), pt({1, 1, 0}), pt({2, 0, 2}), pt({3, 0, 0})})));
    CHECK_THROWS(simplex_body(0));
}

TEST_CASE("trapezoid bodies", "[bodies]") {
    CHECK(same_set(trapezoid_body(1, 1).body, simplex_body(2).body));
    const CandidateBody t21 = trapezoid_body(2, 1);
    CHECK(t21.body.vertices().size() == 4);
    CHECK(shoelace(t21.body) == 2);
    CHECK(volume(t21.body) == 2);
    const CandidateBody t32 = trapezoid_body(3, 2);
    CHECK(t32.body.vertices().size() == 4);
    CHECK(volume(t32.body) == 6);
    CHECK_THROWS(trapezoid_body(1, 2));
    CHECK_THROWS(trapezoid_body(1, 0));

    // The nu1 = t slice is [0, t - max(t - 2, 0) - max(t - 1, 0)].
    for (const Rat& t : {Rat(1) / 2, Rat(1), Rat(3) / 2, Rat(2), Rat(5) / 2}) {
        const Rat length = t - std::max(Rat(0), Rat(t - 2)) - std::max(Rat(0), Rat(t - 1));
        const Polytope s = slice(t21.body, 0, t);
        CHECK(volume(s) == length);
        CHECK(projection_interval(s, 0) == std::pair<Rat, Rat>(0, length));
    }
}

TEST_CASE("threefold bodies", "[bodies]") {
    CHECK(same_set(threefold_body(1, 1, 1).body, simplex_body(3).body));
    const CandidateBody b = threefold_body(3, 2, 1);
    CHECK(volume(b.body) == 6);
    REQUIRE(b.pieces.size() == 3);
    CHECK(volume(b.pieces[0]) == 1);
    CHECK(volume(b.pieces[1]) == 3);
    CHECK(volume(b.pieces[2]) == 2);
    const CandidateBody e = threefold_body(2, 2, 2);
    CHECK(volume(e.body) == 8);
    CHECK(e.body.vertices().size() == 4);
    CHECK_THROWS(threefold_body(1, 2, 1));
}

TEST_CASE("threefold volume is the product and the pieces add up", "[bodies][property]") {
    for (int d1 = 1; d1 <= 5; ++d1) {
        for (int d2 = 1; d2 <= d1; ++d2) {
            for (int d3 = 1; d3 <= d2; ++d3) {
                const CandidateBody b = threefold_body(d1, d2, d3);
                const Rat vol = volume(b.body);
                CHECK(vol == d1 * d2 * d3);
                const auto expected = threefold_piece_volumes(d1, d2, d3);
                Rat sum = 0;
                for (std::size_t k = 0; k < 3; ++k) {
                    CHECK(volume(b.pieces[k]) == expected[k]);
                    sum += volume(b.pieces[k]);
                }
                CHECK(sum == vol);
                if (d1 > d2 && d2 > d3) CHECK(b.body.vertices().size() == 9);
            }
        }
    }
}

TEST_CASE("cone predicates and width", "[bodies]") {
    CHECK(is_pseff_product({1, 2, 3}));
    CHECK_FALSE(is_pseff_product({1, -1}));
    CHECK(is_pseff_product({0, 0}));
    CHECK(is_pseff_blowup({1, 1, 1}, 3));
    CHECK_FALSE(is_pseff_blowup({1, 1}, 3));
    CHECK_FALSE(is_pseff_blowup({1, -1, 3}, 0));
    CHECK_THROWS_AS(is_pseff_blowup({1, 1}, -1), std::invalid_argument);
    CHECK(width({3, 2, 1}) == 6);
    CHECK(width({1}) == 1);
    CHECK(width(std::vector<Rat>(5, Rat(1))) == 5);
    CHECK_THROWS(width({1, 0}));

    Gen g(0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rat> c;
        for (int i = g.integer(1, 4); i > 0; --i) c.push_back(g.rational(3, 2));
        const Rat f = g.positive_rational(6, 2) - 1;
        if (f < 0) continue;
        if (is_pseff_blowup(c, f)) CHECK(is_pseff_product(c));
    }
}

TEST_CASE("verify simplex bodies", "[bodies]") {
    const CandidateBody s3 = simplex_body(3);
    CHECK(volume(slice(s3.body, 0, Rat(3) / 2)) == Rat(3) / 4);
    std::vector<MembershipCertificate> certs;
    for (int d = 1; d <= 3; ++d) certs.push_back(construct_Qd(3, d, 0).certificate);
    const auto report = verify_body(s3, {Rat(1) / 2, 1, Rat(3) / 2, 2, Rat(5) / 2}, certs);
    CHECK(report.passed());
    CHECK(report.checks.size() == 5);

    for (int n = 1; n <= 5; ++n) {
        const CandidateBody b = simplex_body(n);
        const auto all = default_certificates(b, 0);
        std::set<QVector, LexLess> points;
        for (const auto& c : all) points.insert(c.point);
        const std::set<QVector, LexLess> vertices(b.body.vertices().begin(), b.body.vertices().end());
        CHECK(points == vertices);
        const auto r = verify_body(b, default_samples(b.degrees), all);
        INFO(to_json(r).dump());
        CHECK(r.passed());
    }
}

TEST_CASE("verify trapezoid and threefold bodies", "[bodies]") {
    const CandidateBody t = trapezoid_body(2, 1);
    CHECK(verify_body(t, {Rat(1) / 2, 1, Rat(3) / 2, 2, Rat(5) / 2}, default_certificates(t, 0)).passed());

    const CandidateBody b = threefold_body(3, 2, 1);
    const auto r = verify_body(b, default_samples(b.degrees), default_certificates(b, 0));
    INFO(to_json(r).dump());
    CHECK(r.passed());
    CHECK(find(r, "decomposition").pass);
    CHECK(default_certificates(b, 0).size() == 9);

    for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{5, 3}, {4, 4}, {5, 1}}) {
        const CandidateBody tr = trapezoid_body(d1, d2);
        CHECK(verify_body(tr, default_samples(tr.degrees), default_certificates(tr, 3)).passed());
    }
}

TEST_CASE("verification reports failures with residuals", "[bodies]") {
    // A scaled simplex claims the degrees (1, 1) but has area 4.
    CandidateBody wrong{hull({pt({0, 0}), pt({2, 2}), pt({4, 0})}), "trapezoid", {1, 1}, {}};
    const auto r = verify_body(wrong, default_samples(wrong.degrees), {});
    CHECK_FALSE(r.passed());
    CHECK_FALSE(find(r, "volume").pass);
    CHECK(find(r, "volume").detail == "4 vs expected 1 (residual 3)");
    CHECK_FALSE(find(r, "slice volumes").pass);
    CHECK_FALSE(find(r, "projection").pass);
    CHECK(to_json(r).at("passed") == false);
    CHECK(to_json(r).at("checks")[0].at("status") == "fail");

    // A certificate for a different box is rejected.
    const CandidateBody s2 = simplex_body(2);
    const auto foreign = default_certificates(trapezoid_body(2, 1), 0);
    CHECK_FALSE(find(verify_body(s2, {}, foreign), "certificates").pass);

    // Samples outside [0, width] are flagged.
    CHECK_FALSE(find(verify_body(s2, {3}, {}), "slice volumes").pass);
}

TEST_CASE("OFF and SVG export", "[bodies]") {
    const std::string off = to_off(simplex_body(3));
    CHECK(off.rfind("OFF\n4 4 0\n0 0 0\n", 0) == 0);
    const std::string cube_like = to_off(threefold_body(3, 2, 1));
    std::istringstream in(cube_like);
    std::string header;
    std::size_t nv = 0, nf = 0, ne = 0;
    in >> header >> nv >> nf >> ne;
    CHECK(header == "OFF");
    CHECK(nv == 9);
    // Closed triangulated surface: 3F = 2E and V - E + F = 2.
    CHECK(nf % 2 == 0);
    CHECK(static_cast<long>(nv) - static_cast<long>(3 * nf / 2) + static_cast<long>(nf) == 2);

    const std::string svg = to_svg(trapezoid_body(2, 1));
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.find("<polygon points=\"2,-1 1,-1 0,0 3,0\"") != std::string::npos);
    CHECK_THROWS(to_svg(simplex_body(3)));
    CHECK_THROWS(to_off(trapezoid_body(2, 1)));
}
