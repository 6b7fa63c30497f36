// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "inob/bodies.hpp"
#include "inob/sections.hpp"
#include "inob/toric.hpp"
#include "inob/valuation.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace inob;
using inob::testing::Gen;

namespace {

struct Result {
    bool pass = true;
    std::size_t checked = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && pass) first_failure = what;
        pass = pass && ok;
    }
};

Rat product(const std::vector<Rat>& d) {
    Rat p = 1;
    for (const Rat& x : d) p *= x;
    return p;
}

std::string tuple_string(const std::vector<Rat>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + to_string(d[i]);
    return s + ")";
}

QVector pt(std::initializer_list<Rat> xs) { return make_vector(xs); }

bool is_vertex(const Polytope& p, const QVector& x) {
    for (const QVector& v : p.vertices()) {
        if (equal(v, x)) return true;
    }
    return false;
}

// Valuation point and admissibility recomputed from the divisor components.
bool reverify(const MembershipCertificate& c, const QVector& claimed) {
    const int n = c.flag.n();
    QVector point = zero_vector(n);
    Rat degree = 0;
    for (const auto& comp : c.divisor.components) {
        const ValuationVector v = flag_valuation(comp.poly, c.flag);
        for (int i = 0; i + 1 < n; ++i) point[i + 1] += comp.weight * v[static_cast<std::size_t>(i)];
        degree += comp.weight * comp.poly.degree();
    }
    point[0] = degree;
    return equal(point, claimed) && equal(c.point, claimed) && admissible_in_slice(c.divisor, c.degrees, c.t).admissible;
}

Result criterion_simplex_volumes() {
    Result r;
    for (int n = 1; n <= 6; ++n) r.expect(volume(simplex_body(n).body) == 1, "n = " + std::to_string(n));
    return r;
}

Result criterion_simplex_membership() {
    Result r;
    for (int n = 2; n <= 5; ++n) {
        const CandidateBody body = simplex_body(n);
        for (int d = 1; d <= n; ++d) {
            const std::string tag = "(n, d) = (" + std::to_string(n) + ", " + std::to_string(d) + ")";
            const QdResult q = construct_Qd(n, d, 0);
            QVector expected = zero_vector(n);
            expected[0] = d;
            if (d < n) expected[d] = d;
            r.expect(reverify(q.certificate, expected), tag + " valuation");
            for (int i = 0; i < n; ++i) {
                r.expect(mult_at_point(q.q, coordinate_point(n, i)) >= d - 1, tag + " multiplicity");
            }
            r.expect(is_vertex(body.body, expected), tag + " vertex");
        }
    }
    return r;
}

Result criterion_integral_identity() {
    Result r;
    auto check = [&r](const std::vector<Rat>& d) { r.expect(volume_integral(d) == product(d), tuple_string(d)); };
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) {
            check({a, b});
            for (int c = 1; c <= 5; ++c) check({a, b, c});
        }
    }
    Gen g(0);
    for (int n = 4; n <= 5; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Rat> d;
            for (int i = 0; i < n; ++i) d.emplace_back(g.integer(1, 5));
            check(d);
        }
    }
    return r;
}

Result criterion_slice_identity() {
    Result r;
    auto check = [&r](const CandidateBody& b) {
        for (const Rat& t : default_samples(b.degrees)) {
            const Rat got = volume(slice(b.body, 0, t));
            r.expect(got == slice_volume(ToricSliceDivisor(b.degrees, t)),
                     b.provenance + " " + tuple_string(b.degrees) + " at t = " + to_string(t));
        }
    };
    for (int n = 2; n <= 5; ++n) check(simplex_body(n));
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= a; ++b) {
            check(trapezoid_body(a, b));
            for (int c = 1; c <= b; ++c) check(threefold_body(a, b, c));
        }
    }
    return r;
}

Result criterion_threefold_volumes() {
    Result r;
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= a; ++b) {
            for (int c = 1; c <= b; ++c) {
                const std::string tag = tuple_string({a, b, c});
                const CandidateBody body = threefold_body(a, b, c);
                const Rat total = volume(body.body);
                r.expect(total == a * b * c, tag + " volume");
                const std::vector<Rat> expected{Rat(c * c * c), Rat((a + b - 2 * c) * c * c), Rat((a - c) * (b - c) * c)};
                Rat sum = 0;
                for (std::size_t k = 0; k < 3; ++k) {
                    const Rat piece = volume(body.pieces[k]);
                    r.expect(piece == expected[k], tag + " piece " + std::to_string(k + 1));
                    sum += piece;
                }
                r.expect(sum == total, tag + " pieces sum");
            }
        }
    }
    return r;
}

Result criterion_threefold_witnesses() {
    Result r;
    for (const auto& [a, b, c] : std::vector<std::tuple<int, int, int>>{{3, 2, 1}, {2, 2, 1}, {4, 2, 2}, {1, 1, 1}}) {
        const std::string tag = tuple_string({a, b, c});
        const std::vector<QVector> listed{pt({c, c, 0}),         pt({b, c, b - c}),         pt({a, c, b - c}),
                                          pt({a + b - c, c, 0}), pt({b + c, 0, b + c}),     pt({a + c, 0, b + c}),
                                          pt({a + b, 0, 2 * c})};
        const auto certs = threefold_witnesses(a, b, c, 0);
        r.expect(certs.size() == 7, tag + " count");
        for (std::size_t k = 0; k < certs.size() && k < listed.size(); ++k) {
            r.expect(reverify(certs[k], listed[k]), tag + " witness " + std::to_string(k + 1));
        }
    }
    return r;
}

Result criterion_valuation_table() {
    Result r;
    const ThreefoldCurves c = threefold_curves(0);
    r.expect(flag_valuation(c.coordinate_lines[0], c.flag) == ValuationVector({0, 0}), "F1");
    r.expect(flag_valuation(c.flag_line, c.flag) == ValuationVector({1, 0}), "Y2");
    r.expect(flag_valuation(c.point_lines[0], c.flag) == ValuationVector({0, 1}), "l1");
    r.expect(flag_valuation(c.conic, c.flag) == ValuationVector({0, 2}), "Q");
    return r;
}

Result criterion_psi_rank() {
    Result r;
    for (int n = 1; n <= 6; ++n) {
        for (int d = 1; d <= n; ++d) {
            Rng rng(0);
            const PsiMatrix psi = psi_matrix(n, d, LinearFlag::random(n, rng));
            r.expect(psi.rank == static_cast<int>(binomial(n, d)),
                     "(n, d) = (" + std::to_string(n) + ", " + std::to_string(d) + ")");
        }
    }
    // On a line, x_i restricts to w_1 - r_i w_2; a repeated r_i loses rank.
    for (int d = 1; d <= 5; ++d) {
        const int n = d + 1;
        QMatrix forms(n, 2);
        for (int i = 0; i < n; ++i) {
            forms(i, 0) = 1;
            forms(i, 1) = -(i + 1);
        }
        r.expect(psi_matrix(LambdaSystem(n, d), forms).full_rank(), "distinct r_i, d = " + std::to_string(d));
        forms(1, 1) = forms(0, 1);
        r.expect(!psi_matrix(LambdaSystem(n, d), forms).full_rank(), "repeated r_i, d = " + std::to_string(d));
    }
    return r;
}

Result criterion_property_suites() {
    Result r;
    Gen g(0);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = g.integer(2, 5);
        Rng rng(static_cast<std::uint64_t>(trial));
        const LinearFlag flag = LinearFlag::random(n, rng);
        const HomoPoly p = inob::testing::random_poly(g, n, g.integer(0, 4));
        const HomoPoly q = inob::testing::random_poly(g, n, g.integer(0, 3));
        const ValuationVector vp = flag_valuation(p, flag);
        r.expect(flag_valuation(p * q, flag) == vp + flag_valuation(q, flag), "additivity");
        r.expect(vp.sum() <= p.degree(), "simplex bound");
        r.expect(vp.components() == inob::testing::lex_min_oracle(p, flag), "lex-min oracle");
    }
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rat> box;
        for (int i = g.integer(1, 4); i > 0; --i) box.push_back(g.positive_rational(4, 2));
        Rat total = 0;
        for (const Rat& x : box) total += x;
        const Rat t = total * g.integer(0, 12) / 10;
        r.expect(box_slice_volume(box, t) == inob::testing::box_slab_polytope_volume(box, t),
                 "A(t) oracle " + tuple_string(box) + " t = " + to_string(t));
    }
    for (int trial = 0; trial < 100; ++trial) {
        CandidateBody body = simplex_body(g.integer(1, 6));
        const int kind = g.integer(0, 2);
        std::vector<Rat> d;
        for (int i = 0; i < kind + 1; ++i) d.push_back(g.positive_rational(5, 2));
        std::sort(d.rbegin(), d.rend());
        if (kind == 1) body = trapezoid_body(d[0], d[1]);
        if (kind == 2) body = threefold_body(d[0], d[1], d[2]);
        std::set<Rat> heights;
        for (const QVector& v : body.body.vertices()) heights.insert(v[0]);
        for (const Rat& s : branch_points(body.degrees)) {
            r.expect(heights.count(s) == 1, "vertex coverage " + body.provenance + " " + tuple_string(body.degrees));
        }
    }
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"simplex volumes equal 1 for n = 1..6", criterion_simplex_volumes},
        {"Q_d certifies the simplex vertices for n = 2..5", criterion_simplex_membership},
        {"integral of slice volumes equals the product of degrees", criterion_integral_identity},
        {"body slices match toric slice volumes", criterion_slice_identity},
        {"threefold volumes and decomposition", criterion_threefold_volumes},
        {"threefold witnesses certify the seven vertices", criterion_threefold_witnesses},
        {"valuations of the model curves", criterion_valuation_table},
        {"psi_d rank and the degenerate base case", criterion_psi_rank},
        {"randomized property suites", criterion_property_suites},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.pass = false;
            r.first_failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (r.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << r.checked
             << " checks, " << std::fixed;
        line.precision(2);
        line << secs << " s)";
        if (!r.pass) line << ": first failure " << r.first_failure;
        std::puts(line.str().c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
