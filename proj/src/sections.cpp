#include "inob/sections.hpp"

#include "inob/linalg.hpp"

#include <Eigen/Geometry>

#include <limits>
#include <stdexcept>

namespace inob {
namespace {

// Degree-d exponents in k variables, descending lex.
void exponents_desc(int k, int d, int var, Exponent& cur, std::vector<Exponent>& out) {
    if (var == k - 1) {
        cur[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(d);
        out.push_back(cur);
        cur[static_cast<std::size_t>(var)] = 0;
        return;
    }
    for (int a = d; a >= 0; --a) {
        cur[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(a);
        exponents_desc(k, d - a, var + 1, cur, out);
    }
    cur[static_cast<std::size_t>(var)] = 0;
}

void combinations(int n, int d, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == d) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= n - (d - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        combinations(n, d, i + 1, cur, out);
        cur.pop_back();
    }
}

HomoPoly monic(const HomoPoly& p) {
    if (p.is_zero()) return p;
    return p * Rat(1 / p.terms().begin()->second);
}

Rat as_rat(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    return parse_rational(j.get<std::string>());
}

nlohmann::json rat_json(const Rat& x) {
    if (is_integer(x)) {
        const BigInt n = numerator(x);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
            return n.convert_to<long long>();
        }
    }
    return to_string(x);
}

bool generic_threefold_flag(const LinearFlag& flag) {
    const QVector y3 = flag.point();
    for (int i = 0; i < 3; ++i) {
        if (y3[i] == 0 || flag.matrix()(0, i) == 0) return false;
    }
    return true;
}

}  // namespace

LambdaSystem::LambdaSystem(int n_, int d_) : n(n_), d(d_) {
    if (n < 1 || n > kMaxVars || d < 1 || d > n) throw std::invalid_argument("LambdaSystem: need 1 <= d <= n <= 8");
    std::vector<int> cur;
    combinations(n, d, 0, cur, index_sets);
    for (const auto& set : index_sets) {
        Exponent e{};
        for (int i : set) e[static_cast<std::size_t>(i)] = 1;
        basis.emplace_back(n, e);
    }
}

PsiMatrix psi_matrix(const LambdaSystem& lambda, const QMatrix& forms) {
    const int k = lambda.n - lambda.d + 1;
    if (forms.rows() != lambda.n || forms.cols() != k) {
        throw std::invalid_argument("psi_matrix: forms must be n x (n - d + 1)");
    }
    PsiMatrix out;
    Exponent cur{};
    exponents_desc(k, lambda.d, 0, cur, out.rows);
    out.matrix = QMatrix::Zero(static_cast<Eigen::Index>(out.rows.size()), static_cast<Eigen::Index>(lambda.basis.size()));
    for (std::size_t j = 0; j < lambda.basis.size(); ++j) {
        const HomoPoly restricted = substitute(lambda.basis[j], forms);
        for (std::size_t r = 0; r < out.rows.size(); ++r) {
            out.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = restricted.coefficient(out.rows[r]);
        }
    }
    out.rank = rank(out.matrix);
    return out;
}

PsiMatrix psi_matrix(int n, int d, const LinearFlag& flag) {
    if (flag.n() != n) throw std::invalid_argument("psi_matrix: flag dimension mismatch");
    return psi_matrix(LambdaSystem(n, d), flag.parameterization(d));
}

MembershipCertificate certify(const WeightedDivisor& divisor, const std::vector<Rat>& degrees, const Rat& t,
                              const LinearFlag& flag, std::uint64_t seed) {
    if (divisor.nvars != flag.n()) throw std::invalid_argument("certify: flag dimension mismatch");
    const Admissibility adm = admissible_in_slice(divisor, degrees, t);
    if (!adm.admissible) throw std::logic_error("certify: divisor is not admissible in the slice at t = " + to_string(t));
    MembershipCertificate cert;
    cert.divisor = divisor;
    cert.degrees = degrees;
    cert.t = t;
    cert.flag = flag;
    cert.valuation = divisor.valuation(flag);
    cert.point = QVector(flag.n());
    cert.point[0] = t;
    cert.point.tail(flag.n() - 1) = cert.valuation;
    cert.margins = adm.margins;
    cert.seed = seed;
    return cert;
}

bool replay(const MembershipCertificate& cert) {
    try {
        const MembershipCertificate again = certify(cert.divisor, cert.degrees, cert.t, cert.flag, cert.seed);
        return equal(again.point, cert.point) && equal(again.valuation, cert.valuation) && again.margins == cert.margins;
    } catch (const std::exception&) {
        return false;
    }
}

nlohmann::json to_json(const MembershipCertificate& cert) {
    nlohmann::json j;
    j["point"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < cert.point.size(); ++i) j["point"].push_back(to_string(cert.point[i]));
    j["t"] = to_string(cert.t);
    j["divisor"] = nlohmann::json::array();
    for (const auto& c : cert.divisor.components) {
        j["divisor"].push_back({{"weight", to_string(c.weight)}, {"poly", to_string(c.poly)}});
    }
    j["margins"] = nlohmann::json::array();
    for (const Rat& m : cert.margins) j["margins"].push_back(rat_json(m));
    j["seed"] = cert.seed;
    j["degrees"] = nlohmann::json::array();
    for (const Rat& d : cert.degrees) j["degrees"].push_back(to_string(d));
    j["flag"] = nlohmann::json::array();
    for (Eigen::Index r = 0; r < cert.flag.matrix().rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < cert.flag.matrix().cols(); ++c) row.push_back(to_string(cert.flag.matrix()(r, c)));
        j["flag"].push_back(row);
    }
    return j;
}

MembershipCertificate certificate_from_json(const nlohmann::json& j) {
    MembershipCertificate cert;
    const auto& rows = j.at("flag");
    const auto n = static_cast<Eigen::Index>(rows.size());
    QMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = as_rat(rows.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)));
    }
    cert.flag = LinearFlag(m);
    cert.divisor = WeightedDivisor(static_cast<int>(n));
    for (const auto& c : j.at("divisor")) {
        cert.divisor.add(as_rat(c.at("weight")), parse_poly(c.at("poly").get<std::string>(), static_cast<int>(n)));
    }
    for (const auto& d : j.at("degrees")) cert.degrees.push_back(as_rat(d));
    cert.t = as_rat(j.at("t"));
    const auto& point = j.at("point");
    cert.point = QVector(static_cast<Eigen::Index>(point.size()));
    for (std::size_t i = 0; i < point.size(); ++i) cert.point[static_cast<Eigen::Index>(i)] = as_rat(point[i]);
    cert.valuation = cert.point.tail(cert.point.size() - 1);
    for (const auto& mg : j.at("margins")) cert.margins.push_back(as_rat(mg));
    cert.seed = j.at("seed").get<std::uint64_t>();
    return cert;
}

QdResult construct_Qd(int n, int d, const LinearFlag& flag, std::uint64_t seed) {
    PsiMatrix psi = psi_matrix(n, d, flag);
    if (!psi.full_rank()) throw GenericityError("construct_Qd: psi_d is not of full rank for this flag");
    QVector target = zero_vector(psi.matrix.rows());
    target[0] = 1;   // w_1^d, where w_1 = z_d is the equation of Y_{d+1} in Y_d
    const LinearSolution sol = solve_linear(psi.matrix, target);
    const LambdaSystem lambda(n, d);
    HomoPoly q(n);
    for (std::size_t j = 0; j < lambda.basis.size(); ++j) q += sol.solution[static_cast<Eigen::Index>(j)] * lambda.basis[j];

    Exponent top{};
    top[0] = static_cast<std::uint16_t>(d);
    if (substitute(q, flag.parameterization(d)) != HomoPoly(n - d + 1, top)) {
        throw std::logic_error("construct_Qd: restriction of Q_d differs from f^d");
    }
    WeightedDivisor divisor(n);
    divisor.add(1, monic(q));
    const std::vector<Rat> ones(static_cast<std::size_t>(n), Rat(1));
    MembershipCertificate cert = certify(divisor, ones, d, flag, seed);
    QVector expected = zero_vector(n);
    expected[0] = d;
    if (d < n) expected[d] = d;
    if (!equal(cert.point, expected)) {
        throw std::logic_error("construct_Qd: Q_d has valuation point " + to_string(cert.point) + ", expected " +
                               to_string(expected));
    }
    for (int i = 0; i < n; ++i) {
        if (mult_at_point(q, coordinate_point(n, i)) < d - 1) throw std::logic_error("construct_Qd: multiplicity below d - 1");
    }
    return QdResult{flag, std::move(psi), std::move(q), 1, std::move(cert)};
}

QdResult construct_Qd(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 1 || d > n) throw std::invalid_argument("construct_Qd: need 1 <= d <= n");
    Rng rng(seed);
    for (int attempt = 1; attempt <= kResampleBudget; ++attempt) {
        const LinearFlag flag = LinearFlag::random(n, rng);
        if (!psi_matrix(n, d, flag).full_rank()) continue;
        QdResult out = construct_Qd(n, d, flag, seed);
        out.attempts = attempt;
        return out;
    }
    throw GenericityError("construct_Qd: no flag with full-rank psi_d within the resample budget");
}

MembershipCertificate origin_certificate(const std::vector<Rat>& degrees, const LinearFlag& flag, std::uint64_t seed) {
    return certify(WeightedDivisor(flag.n()), degrees, 0, flag, seed);
}

MembershipCertificate corner_certificate(const std::vector<Rat>& degrees, const LinearFlag& flag, std::uint64_t seed) {
    const int n = flag.n();
    if (static_cast<int>(degrees.size()) != n) throw std::invalid_argument("corner_certificate: degree count mismatch");
    WeightedDivisor divisor(n);
    Rat total = 0;
    for (int i = 0; i < n; ++i) {
        divisor.add(degrees[static_cast<std::size_t>(i)], HomoPoly::variable(n, i));
        total += degrees[static_cast<std::size_t>(i)];
    }
    MembershipCertificate cert = certify(divisor, degrees, total, flag, seed);
    QVector expected = zero_vector(n);
    expected[0] = total;
    if (!equal(cert.point, expected)) throw std::logic_error("corner_certificate: flag point lies on a coordinate hyperplane");
    return cert;
}

ThreefoldCurves threefold_curves(const LinearFlag& flag) {
    if (flag.n() != 3) throw std::invalid_argument("threefold_curves: need a flag on P^2");
    if (!generic_threefold_flag(flag)) {
        throw GenericityError("threefold_curves: flag meets a coordinate point or coordinate line");
    }
    auto x = [](int i) { return HomoPoly::variable(3, i); };
    const QVector y3 = flag.point();
    std::array<HomoPoly, 3> point_lines{HomoPoly(3), HomoPoly(3), HomoPoly(3)};
    for (int i = 0; i < 3; ++i) {
        const Eigen::Matrix<Rat, 3, 1> a = y3;
        const Eigen::Matrix<Rat, 3, 1> b = coordinate_point(3, i);
        const QVector normal = a.cross(b);
        point_lines[static_cast<std::size_t>(i)] = HomoPoly::linear_form(normal);
    }
    // Conics through p_1, p_2, p_3 are a x2 x3 + b x1 x3 + c x1 x2. Tangency to
    // Y_2 at Y_3 means the restriction to Y_2 is a multiple of w_1^2.
    const std::array<HomoPoly, 3> conic_basis{x(1) * x(2), x(0) * x(2), x(0) * x(1)};
    const QMatrix params = flag.parameterization(2);
    Exponent w11{}, w12{}, w22{};
    w11[0] = 2;
    w12[0] = 1;
    w12[1] = 1;
    w22[1] = 2;
    QMatrix system(2, 3);
    QVector lead(3);
    for (int j = 0; j < 3; ++j) {
        const HomoPoly r = substitute(conic_basis[static_cast<std::size_t>(j)], params);
        system(0, j) = r.coefficient(w12);
        system(1, j) = r.coefficient(w22);
        lead[j] = r.coefficient(w11);
    }
    const QMatrix kernel = null_space(system);
    if (kernel.cols() != 1) throw GenericityError("threefold_curves: tangent conic is not unique");
    const Rat alpha = lead.dot(kernel.col(0));
    if (alpha == 0) throw GenericityError("threefold_curves: tangent conic degenerates on Y_2");
    const QVector coeffs = kernel.col(0) / alpha;
    HomoPoly conic(3);
    for (int j = 0; j < 3; ++j) conic += coeffs[j] * conic_basis[static_cast<std::size_t>(j)];
    return ThreefoldCurves{flag, {x(0), x(1), x(2)}, HomoPoly::linear_form(flag.coordinate_form(1)), point_lines,
                           conic, 1};
}

ThreefoldCurves threefold_curves(std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 1; attempt <= kResampleBudget; ++attempt) {
        const LinearFlag flag = LinearFlag::random(3, rng);
        try {
            ThreefoldCurves out = threefold_curves(flag);
            out.attempts = attempt;
            return out;
        } catch (const GenericityError&) {
        }
    }
    throw GenericityError("threefold_curves: no generic flag within the resample budget");
}

std::vector<QVector> threefold_vertices(const Rat& d1, const Rat& d2, const Rat& d3) {
    auto v = [](const Rat& a, const Rat& b, const Rat& c) { return make_vector({a, b, c}); };
    return {v(d3, d3, 0),
            v(d2, d3, d2 - d3),
            v(d1, d3, d2 - d3),
            v(d1 + d2 - d3, d3, 0),
            v(d2 + d3, 0, d2 + d3),
            v(d1 + d3, 0, d2 + d3),
            v(d1 + d2, 0, 2 * d3)};
}

std::vector<MembershipCertificate> threefold_witnesses(const Rat& d1, const Rat& d2, const Rat& d3,
                                                       std::uint64_t seed) {
    for (const Rat& d : {d1, d2, d3}) {
        if (!is_integer(d)) throw std::invalid_argument("threefold_witnesses: degrees must be integers");
    }
    if (!(d1 >= d2 && d2 >= d3 && d3 > 0)) throw std::invalid_argument("threefold_witnesses: need d1 >= d2 >= d3 > 0");
    const ThreefoldCurves c = threefold_curves(seed);
    const HomoPoly& f1 = c.coordinate_lines[0];
    const HomoPoly& f2 = c.coordinate_lines[1];
    const HomoPoly& l3 = c.point_lines[2];
    const HomoPoly& y2 = c.flag_line;
    const HomoPoly& q = c.conic;

    auto divisor = [](std::initializer_list<std::pair<Rat, const HomoPoly*>> parts) {
        WeightedDivisor w(3);
        for (const auto& [weight, poly] : parts) w.add(weight, *poly);
        return w;
    };
    const std::vector<WeightedDivisor> divisors{
        divisor({{d3, &y2}}),
        divisor({{d3, &y2}, {d2 - d3, &l3}}),
        divisor({{d3, &y2}, {d1 - d2, &f1}, {d2 - d3, &l3}}),
        divisor({{d3, &y2}, {d2 - d3, &f2}, {d1 - d3, &f1}}),
        divisor({{d3, &q}, {d2 - d3, &l3}}),
        divisor({{d3, &q}, {d1 - d2, &f1}, {d2 - d3, &l3}}),
        divisor({{d3, &q}, {d2 - d3, &f2}, {d1 - d3, &f1}}),
    };
    const std::vector<QVector> expected = threefold_vertices(d1, d2, d3);
    const std::vector<Rat> degrees{d1, d2, d3};
    std::vector<MembershipCertificate> out;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
        MembershipCertificate cert = certify(divisors[k], degrees, expected[k][0], c.flag, seed);
        if (!equal(cert.point, expected[k])) {
            throw std::logic_error("threefold_witnesses: witness " + std::to_string(k + 1) + " has point " +
                                   to_string(cert.point) + ", expected " + to_string(expected[k]));
        }
        out.push_back(std::move(cert));
    }
    return out;
}

}  // namespace inob
