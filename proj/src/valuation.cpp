#include "inob/valuation.hpp"

#include "inob/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace inob {

LinearFlag::LinearFlag(QMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) throw std::invalid_argument("LinearFlag: matrix must be square");
    if (determinant(m_) == 0) throw std::domain_error("LinearFlag: matrix is singular");
    inverse_ = inob::inverse(m_);
}

LinearFlag LinearFlag::identity(int n) { return LinearFlag(QMatrix::Identity(n, n)); }

LinearFlag LinearFlag::random(int n, Rng& rng) {
    // p/q with 1 <= |p| <= 32 and 1 <= q <= 4, uniform over the 256 pairs.
    auto entry = [&rng] {
        const std::uint64_t r = rng() % 256;
        const long p = static_cast<long>(r % 32) + 1;
        const long q = static_cast<long>((r / 32) % 4) + 1;
        return Rat((r / 128) ? -p : p) / q;
    };
    while (true) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = entry();
        if (determinant(m) != 0) return LinearFlag(std::move(m));
    }
}

QMatrix LinearFlag::parameterization(int i) const {
    if (i < 1 || i > n()) throw std::invalid_argument("LinearFlag::parameterization: index out of range");
    return inverse_.rightCols(n() - i + 1);
}

QVector LinearFlag::coordinate_form(int k) const {
    if (k < 1 || k > n()) throw std::invalid_argument("LinearFlag::coordinate_form: index out of range");
    return m_.row(k - 1).transpose();
}

QVector LinearFlag::point() const { return inverse_.col(n() - 1); }

int ValuationVector::sum() const {
    int s = 0;
    for (int v : nu_) s += v;
    return s;
}

QVector ValuationVector::to_vector() const {
    QVector out(static_cast<Eigen::Index>(nu_.size()));
    for (std::size_t i = 0; i < nu_.size(); ++i) out[static_cast<Eigen::Index>(i)] = nu_[i];
    return out;
}

ValuationVector operator+(const ValuationVector& a, const ValuationVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("ValuationVector: length mismatch");
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return ValuationVector(std::move(out));
}

std::string to_string(const ValuationVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

ValuationVector flag_valuation(const HomoPoly& p, const LinearFlag& flag) {
    if (p.is_zero()) throw std::invalid_argument("flag_valuation: the zero polynomial has no valuation");
    if (p.nvars() != flag.n()) throw std::invalid_argument("flag_valuation: variable count does not match the flag");
    const int n = flag.n();
    // In z-coordinates Y_{k+1} is cut out of Y_k by z_k.
    HomoPoly::TermMap current = substitute(p, flag.inverse()).terms();
    std::vector<int> nu;
    for (int k = 0; k + 1 < n; ++k) {
        int order = p.degree();
        for (const auto& [e, c] : current) order = std::min<int>(order, e[static_cast<std::size_t>(k)]);
        nu.push_back(order);
        // Divide by z_k^order, then set z_k = 0.
        HomoPoly::TermMap restricted;
        for (const auto& [e, c] : current) {
            if (e[static_cast<std::size_t>(k)] != order) continue;
            Exponent r = e;
            r[static_cast<std::size_t>(k)] = 0;
            restricted.emplace(r, c);
        }
        current = std::move(restricted);
    }
    if (current.size() != 1) throw std::logic_error("flag_valuation: residual is not a monomial");
    return ValuationVector(std::move(nu));
}

int mult_at_point(const HomoPoly& p, const QVector& point, int chart) {
    const int n = p.nvars();
    if (point.size() != n) throw std::invalid_argument("mult_at_point: point dimension mismatch");
    if (p.is_zero()) throw std::invalid_argument("mult_at_point: zero polynomial");
    if (chart < 0) {
        for (int i = 0; i < n && chart < 0; ++i) {
            if (point[i] != 0) chart = i;
        }
        if (chart < 0) throw std::invalid_argument("mult_at_point: the zero vector is not a projective point");
    }
    if (chart >= n || point[chart] == 0) throw std::invalid_argument("mult_at_point: chart coordinate vanishes at the point");
    // x = w * point / point[chart] + sum_{i != chart} y_i e_i. Setting w = 1
    // dehomogenizes with the point at the origin of the y-chart, so the
    // multiplicity is the lowest y-degree, i.e. degree - max w-exponent.
    QMatrix l = QMatrix::Zero(n, n);
    l.col(0) = point / point[chart];
    for (int i = 0, col = 1; i < n; ++i) {
        if (i != chart) l(i, col++) = 1;
    }
    const HomoPoly q = substitute(p, l);
    int top_w = 0;
    for (const auto& [e, c] : q.terms()) top_w = std::max<int>(top_w, e[0]);
    return p.degree() - top_w;
}

QVector coordinate_point(int n, int i) {
    QVector out = zero_vector(n);
    out[i] = 1;
    return out;
}

WeightedDivisor& WeightedDivisor::add(const Rat& weight, const HomoPoly& poly) {
    if (poly.nvars() != nvars) throw std::invalid_argument("WeightedDivisor: variable count mismatch");
    if (weight < 0) throw std::invalid_argument("WeightedDivisor: weights must be nonnegative");
    if (weight == 0) return *this;
    if (poly.is_zero()) throw std::invalid_argument("WeightedDivisor: zero polynomial is not a divisor");
    components.push_back({weight, poly});
    return *this;
}

Rat WeightedDivisor::degree() const {
    Rat d = 0;
    for (const auto& c : components) d += c.weight * c.poly.degree();
    return d;
}

QVector WeightedDivisor::valuation(const LinearFlag& flag) const {
    QVector out = zero_vector(nvars - 1);
    for (const auto& c : components) out += c.weight * flag_valuation(c.poly, flag).to_vector();
    return out;
}

Rat WeightedDivisor::mult_at_point(const QVector& point) const {
    Rat m = 0;
    for (const auto& c : components) m += c.weight * inob::mult_at_point(c.poly, point);
    return m;
}

Admissibility admissible_in_slice(const WeightedDivisor& divisor, const std::vector<Rat>& degrees, const Rat& t) {
    if (static_cast<int>(degrees.size()) != divisor.nvars) {
        throw std::invalid_argument("admissible_in_slice: need one degree per coordinate point");
    }
    if (divisor.degree() != t) {
        throw std::invalid_argument("admissible_in_slice: divisor degree " + to_string(divisor.degree()) +
                                    " differs from t = " + to_string(t));
    }
    Admissibility out;
    out.admissible = true;
    for (int i = 0; i < divisor.nvars; ++i) {
        const Rat required = std::max(Rat(0), Rat(t - degrees[static_cast<std::size_t>(i)]));
        const Rat margin = divisor.mult_at_point(coordinate_point(divisor.nvars, i)) - required;
        out.margins.push_back(margin);
        if (margin < 0) out.admissible = false;
    }
    return out;
}

Admissibility admissible_in_slice(const HomoPoly& p, const std::vector<Rat>& degrees, const Rat& t) {
    WeightedDivisor d(p.nvars());
    d.add(1, p);
    return admissible_in_slice(d, degrees, t);
}

}  // namespace inob
