#include "inob/poly.hpp"
#include "inob/valuation.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace inob;
using inob::testing::Gen;
using inob::testing::lex_min_oracle;
using inob::testing::random_poly;

namespace {

HomoPoly P(const char* text, int n = 3) { return parse_poly(text, n); }

QVector pt(std::initializer_list<Rat> xs) { return make_vector(xs); }

HomoPoly partial(const HomoPoly& p, int i) {
    HomoPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[static_cast<std::size_t>(i)] == 0) continue;
        Exponent f = e;
        --f[static_cast<std::size_t>(i)];
        out += HomoPoly(p.nvars(), f, c * e[static_cast<std::size_t>(i)]);
    }
    return out;
}

// Multiplicity as the lowest order of a partial derivative not vanishing at p.
int derivative_oracle(const HomoPoly& p, const QVector& point) {
    std::vector<HomoPoly> layer{p};
    for (int order = 0; order <= p.degree(); ++order) {
        for (const HomoPoly& q : layer) {
            if (!q.is_zero() && q.evaluate(point) != 0) return order;
        }
        std::vector<HomoPoly> next;
        for (const HomoPoly& q : layer) {
            for (int i = 0; i < p.nvars(); ++i) {
                HomoPoly d = partial(q, i);
                if (!d.is_zero()) next.push_back(std::move(d));
            }
        }
        layer = std::move(next);
    }
    return p.degree();
}

QVector random_projective_point(Gen& g, int n) {
    QVector v = zero_vector(n);
    while (v.isZero()) {
        for (int i = 0; i < n; ++i) v[i] = g.integer(0, 2) == 0 ? Rat(0) : g.rational(3, 2);
    }
    return v;
}

}  // namespace

TEST_CASE("polynomial text format", "[poly]") {
    CHECK(to_string(P("x1*x3 - x2^2")) == "x1*x3 - x2^2");
    CHECK(to_string(P("-x2^2 + x3*x1")) == "x1*x3 - x2^2");
    CHECK(to_string(P("3/2 * x1^2*x3 - 1/3*x2^3")) == "3/2*x1^2*x3 - 1/3*x2^3");
    CHECK(to_string(P("x1*x1")) == "x1^2");
    CHECK(to_string(P("x1 - x1")) == "0");
    CHECK(to_string(P("0")) == "0");
    CHECK(P("x1").degree() == 1);
    CHECK(parse_poly("x1*x3").nvars() == 3);
    CHECK(parse_poly("x1").nvars() == 2);

    CHECK_THROWS_AS(P("x1 + x2^2"), ParseError);
    CHECK_THROWS_AS(P("x1 + 0.5*x2"), ParseError);
    CHECK_THROWS_AS(P("x4"), ParseError);
    CHECK_THROWS_AS(P("x1 +"), ParseError);
    CHECK_THROWS_AS(P("y1"), ParseError);
    try {
        P("x1*x2 + x3");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
    try {
        P("x1 + 1/0*x2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("text format round-trips", "[poly][property]") {
    Gen g(0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = g.integer(2, 6);
        const HomoPoly p = random_poly(g, n, g.integer(0, 5), 6);
        const std::string text = to_string(p);
        const HomoPoly q = parse_poly(text, n);
        CHECK(q == p);
        CHECK(to_string(q) == text);
    }
}

TEST_CASE("polynomial arithmetic", "[poly]") {
    const HomoPoly a = P("x1 + x2");
    CHECK(to_string(pow(a, 2)) == "x1^2 + 2*x1*x2 + x2^2");
    CHECK(to_string(a * P("x1 - x2")) == "x1^2 - x2^2");
    CHECK_THROWS(P("x1") + P("x1^2"));
    CHECK(P("x1*x2 + x3^2").evaluate(pt({2, 3, 1})) == 7);
    CHECK(HomoPoly::linear_form(pt({1, 0, -2})) == P("x1 - 2*x3"));
}

TEST_CASE("coordinate composition", "[poly]") {
    const QMatrix id = QMatrix::Identity(3, 3);
    CHECK(compose_coordinates(P("x1"), id) == P("x1"));
    QMatrix swap = QMatrix::Zero(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK(compose_coordinates(parse_poly("x1*x2", 2), swap) == parse_poly("x1*x2", 2));

    // The line x = (s, s + u, u) with coordinates (s, u).
    QMatrix line(3, 2);
    line << 1, 0, 1, 1, 0, 1;
    const HomoPoly restricted = compose_coordinates(P("x1*x3 - x2^2"), line);
    CHECK(restricted == parse_poly("-x1^2 - x1*x2 - x2^2", 2));

    QMatrix singular = QMatrix::Ones(3, 3);
    CHECK_THROWS_AS(compose_coordinates(P("x1"), singular), std::domain_error);
    QMatrix flat(3, 2);
    flat << 1, 2, 1, 2, 1, 2;
    CHECK_THROWS_AS(compose_coordinates(P("x1"), flat), std::domain_error);
}

TEST_CASE("flag valuation examples", "[valuation]") {
    const LinearFlag id = LinearFlag::identity(3);
    CHECK(flag_valuation(P("x1"), id) == ValuationVector({1, 0}));
    CHECK(flag_valuation(P("x2"), id) == ValuationVector({0, 1}));
    CHECK(flag_valuation(P("x3"), id) == ValuationVector({0, 0}));
    CHECK(flag_valuation(P("x1*x3 - x2^2"), id) == ValuationVector({0, 2}));
    CHECK(flag_valuation(P("x1") * P("x1*x3 - x2^2"), id) == ValuationVector({1, 2}));
    CHECK(to_string(flag_valuation(P("x1*x3 - x2^2"), id)) == "(0,2)");
    CHECK_THROWS(flag_valuation(HomoPoly(3), id));
    CHECK_THROWS(flag_valuation(P("x1", 4), id));

    // z = M x with z1 = x1 + x2: the form x1 + x2 is the flag hyperplane.
    QMatrix m = QMatrix::Identity(3, 3);
    m(0, 1) = 1;
    const LinearFlag flag(m);
    CHECK(flag_valuation(P("x1 + x2"), flag) == ValuationVector({1, 0}));
    CHECK(equal(flag.point(), pt({0, 0, 1})));
    CHECK_THROWS(LinearFlag(QMatrix::Ones(3, 3)));
}

TEST_CASE("flag valuation properties", "[valuation][property]") {
    Gen g(0);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = g.integer(2, 5);
        const LinearFlag flag = g.integer(0, 3) == 0 ? LinearFlag::identity(n) : LinearFlag::random(n, g.engine());
        const HomoPoly p = random_poly(g, n, g.integer(0, 4));
        const HomoPoly q = random_poly(g, n, g.integer(0, 3));
        const ValuationVector vp = flag_valuation(p, flag);
        const ValuationVector vq = flag_valuation(q, flag);
        CHECK(flag_valuation(p * q, flag) == vp + vq);
        CHECK(vp.size() == static_cast<std::size_t>(n - 1));
        CHECK(vp.sum() <= p.degree());
        for (int v : vp.components()) CHECK(v >= 0);
        CHECK(vp.components() == lex_min_oracle(p, flag));
    }
}

TEST_CASE("multiplicity examples", "[valuation]") {
    CHECK(mult_at_point(P("x1*x2*x3"), pt({1, 0, 0})) == 2);
    CHECK(mult_at_point(P("x1"), pt({1, 0, 0})) == 0);
    CHECK(mult_at_point(P("x1*x3 - x2^2"), pt({0, 0, 1})) == 1);
    CHECK(mult_at_point(P("x1^2*x3 - x2^3"), pt({0, 0, 1})) == 2);
    CHECK(mult_at_point(P("x1 - x2"), pt({2, 2, 5})) == 1);
    CHECK_THROWS(mult_at_point(P("x1"), pt({0, 0, 0})));
    CHECK_THROWS(mult_at_point(P("x1"), pt({1, 0, 0}), 1));
}

TEST_CASE("multiplicity properties", "[valuation][property]") {
    Gen g(0);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = g.integer(2, 4);
        const QVector point = random_projective_point(g, n);
        // Bias towards vanishing: multiply by forms through the point.
        HomoPoly p = random_poly(g, n, g.integer(0, 2));
        for (int k = g.integer(0, 2); k > 0; --k) {
            QVector form = g.point(n, 3, 2);
            int j = 0;
            while (point[j] == 0) ++j;
            form[j] = 0;
            form[j] = -form.dot(point) / point[j];
            if (!form.isZero()) p = p * HomoPoly::linear_form(form);
        }
        const HomoPoly q = random_poly(g, n, g.integer(0, 2));
        const int mp = mult_at_point(p, point);
        CHECK(mp == derivative_oracle(p, point));
        CHECK(mult_at_point(p * q, point) == mp + mult_at_point(q, point));
        for (int chart = 0; chart < n; ++chart) {
            if (point[chart] != 0) CHECK(mult_at_point(p, point, chart) == mp);
        }
        CHECK(mult_at_point(p, Rat(g.positive_rational(3, 3)) * point) == mp);
    }
}

TEST_CASE("slice admissibility", "[valuation]") {
    const std::vector<Rat> ones{1, 1, 1};
    const Admissibility a = admissible_in_slice(P("x1*x2*x3"), ones, 3);
    CHECK(a.admissible);
    CHECK(a.margins == std::vector<Rat>{0, 0, 0});

    const Admissibility b = admissible_in_slice(P("x1^2"), ones, 2);
    CHECK_FALSE(b.admissible);
    CHECK(b.margins == std::vector<Rat>{-1, 1, 1});

    // Degree 2 curve through p3 = [0:0:1] for d = (3, 2, 1).
    WeightedDivisor w(3);
    w.add(1, P("x1")).add(1, P("x1 - x2"));
    const Admissibility c = admissible_in_slice(w, {3, 2, 1}, 2);
    CHECK(c.admissible);
    CHECK(c.margins == std::vector<Rat>{0, 1, 1});

    WeightedDivisor half(3);
    half.add(Rat(1) / 2, P("x1*x2")).add(Rat(1) / 2, P("x3"));
    CHECK(half.degree() == Rat(3) / 2);
    CHECK(equal(half.valuation(LinearFlag::identity(3)), pt({Rat(1) / 2, Rat(1) / 2})));
    CHECK(half.mult_at_point(pt({1, 0, 0})) == 1);
    CHECK(half.mult_at_point(pt({1, 1, 0})) == Rat(1) / 2);

    CHECK_THROWS(admissible_in_slice(P("x1"), ones, 2));
    CHECK_THROWS(half.add(-1, P("x1")));
}
