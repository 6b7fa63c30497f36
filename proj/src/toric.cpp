#include "inob/toric.hpp"

#include "inob/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace inob {

BlowupFan::BlowupFan(int n_) : n(n_) {
    if (n < 2) throw std::invalid_argument("BlowupFan: n must be >= 2");
    const Eigen::Index dim = n - 1;
    QVector last = zero_vector(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        QVector fi = zero_vector(dim);
        fi[i] = 1;
        last -= fi;
        f.push_back(fi);
    }
    f.push_back(last);
    for (const QVector& fi : f) e.push_back(-fi);
}

ToricSliceDivisor::ToricSliceDivisor(std::vector<Rat> degrees, Rat t)
    : degrees_(std::move(degrees)), t_(std::move(t)) {
    if (degrees_.size() < 2) throw std::invalid_argument("ToricSliceDivisor: need n >= 2 degrees");
    Rat total = 0;
    for (const Rat& d : degrees_) {
        if (d <= 0) throw std::invalid_argument("ToricSliceDivisor: degrees must be positive");
        total += d;
    }
    if (t_ < 0 || t_ > total) throw std::invalid_argument("ToricSliceDivisor: t must lie in [0, sum of degrees]");
}

Rat ToricSliceDivisor::f_coefficient() const { return t_ / n(); }

Rat ToricSliceDivisor::e_coefficient(int i) const {
    return degrees_.at(static_cast<std::size_t>(i)) - t_ / n();
}

Polytope divisor_polytope(const ToricSliceDivisor& divisor) {
    const BlowupFan fan(divisor.n());
    std::vector<Halfspace> hs;
    for (int i = 0; i < divisor.n(); ++i) {
        hs.emplace_back(fan.f[static_cast<std::size_t>(i)], -divisor.f_coefficient());
        hs.emplace_back(fan.e[static_cast<std::size_t>(i)], -divisor.e_coefficient(i));
    }
    return intersect_halfspaces(divisor.n() - 1, hs);
}

Polytope divisor_polytope_translated(const ToricSliceDivisor& divisor) {
    const int n = divisor.n();
    const Eigen::Index dim = n - 1;
    const auto& d = divisor.degrees();
    std::vector<Halfspace> hs;
    QVector ones(dim);
    ones.setConstant(Rat(1));
    for (Eigen::Index i = 0; i < dim; ++i) {
        QVector unit = zero_vector(dim);
        unit[i] = 1;
        hs.emplace_back(unit, Rat(0));
        hs.emplace_back(-unit, -d[static_cast<std::size_t>(i)]);
    }
    hs.emplace_back(ones, divisor.t() - d.back());
    hs.emplace_back(-ones, -divisor.t());
    return intersect_halfspaces(dim, hs);
}

Rat box_slice_volume(const std::vector<Rat>& box, const Rat& t) {
    const std::size_t k = box.size();
    if (k == 0) throw std::invalid_argument("box_slice_volume: empty box");
    for (const Rat& d : box) {
        if (d <= 0) throw std::invalid_argument("box_slice_volume: box sides must be positive");
    }
    Rat total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Rat shift = 0;
        int size = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1U) {
                shift += box[i];
                ++size;
            }
        }
        const Rat excess = t - shift;
        if (excess <= 0) continue;
        const Rat term = pow(excess, static_cast<int>(k));
        total += (size % 2 == 0) ? term : Rat(-term);
    }
    return total / factorial(static_cast<int>(k));
}

Rat slice_volume(const ToricSliceDivisor& divisor) {
    const auto& d = divisor.degrees();
    const std::vector<Rat> box(d.begin(), d.end() - 1);
    return box_slice_volume(box, divisor.t()) - box_slice_volume(box, divisor.t() - d.back());
}

std::vector<Rat> branch_points(const std::vector<Rat>& d) {
    std::set<Rat> sums{Rat(0)};
    for (const Rat& di : d) {
        std::set<Rat> next = sums;
        for (const Rat& s : sums) next.insert(s + di);
        sums = std::move(next);
    }
    return {sums.begin(), sums.end()};
}

std::vector<Rat> interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values, const Rat& origin) {
    if (nodes.size() != values.size() || nodes.empty()) {
        throw std::invalid_argument("interpolate: need matching, nonempty node and value lists");
    }
    const auto k = static_cast<Eigen::Index>(nodes.size());
    QMatrix vandermonde(k, k);
    QVector rhs(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const Rat x = nodes[static_cast<std::size_t>(i)] - origin;
        Rat power = 1;
        for (Eigen::Index j = 0; j < k; ++j) {
            vandermonde(i, j) = power;
            power *= x;
        }
        rhs[i] = values[static_cast<std::size_t>(i)];
    }
    const auto sol = solve_linear(vandermonde, rhs);
    if (!sol.consistent || sol.rank < k) throw std::invalid_argument("interpolate: nodes must be distinct");
    return {sol.solution.begin(), sol.solution.end()};
}

Rat evaluate(const std::vector<Rat>& coefficients, const Rat& origin, const Rat& x) {
    Rat out = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) out = out * (x - origin) + *it;
    return out;
}

Rat integrate_piecewise(const std::function<Rat(const Rat&)>& f, const Rat& lo, const Rat& hi,
                        const std::vector<Rat>& breakpoints, int degree) {
    if (hi < lo) throw std::invalid_argument("integrate_piecewise: empty interval");
    std::set<Rat> cuts{lo, hi};
    for (const Rat& b : breakpoints) {
        if (b > lo && b < hi) cuts.insert(b);
    }
    const std::vector<Rat> pts(cuts.begin(), cuts.end());
    Rat total = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Rat& a = pts[i];
        const Rat width = pts[i + 1] - a;
        std::vector<Rat> nodes;
        std::vector<Rat> values;
        for (int j = 0; j <= degree; ++j) {
            nodes.push_back(degree == 0 ? a + width / 2 : a + width * j / degree);
            values.push_back(f(nodes.back()));
        }
        const std::vector<Rat> c = interpolate(nodes, values, a);
        Rat power = width;
        for (std::size_t k = 0; k < c.size(); ++k) {
            total += c[k] * power / Rat(static_cast<long>(k) + 1);
            power *= width;
        }
    }
    return total;
}

Rat volume_integral(const std::vector<Rat>& degrees) {
    if (degrees.size() < 2) throw std::invalid_argument("volume_integral: need n >= 2 degrees");
    const int n = static_cast<int>(degrees.size());
    const Rat total = std::accumulate(degrees.begin(), degrees.end(), Rat(0));
    const std::vector<Rat> box(degrees.begin(), degrees.end() - 1);
    const Rat box_total = total - degrees.back();

    const Rat piecewise = integrate_piecewise(
        [&](const Rat& t) { return slice_volume(ToricSliceDivisor(degrees, t)); }, Rat(0), total,
        branch_points(degrees), n - 1);
    const Rat simplified = integrate_piecewise(
        [&](const Rat& t) { return box_slice_volume(box, t); }, box_total, total, branch_points(box), n - 1);
    if (piecewise != simplified) {
        throw std::logic_error("volume_integral: piecewise integral " + to_string(piecewise) +
                               " disagrees with the simplified form " + to_string(simplified));
    }
    return piecewise;
}

std::vector<Rat> sample_grid(const std::vector<Rat>& degrees) {
    const std::vector<Rat> br = branch_points(degrees);
    std::vector<Rat> out;
    for (std::size_t i = 0; i < br.size(); ++i) {
        out.push_back(br[i]);
        if (i + 1 < br.size()) out.push_back((br[i] + br[i + 1]) / 2);
    }
    return out;
}

std::string slice_volume_csv(const std::vector<Rat>& degrees) {
    std::ostringstream out;
    out << "t,volume\n";
    for (const Rat& t : sample_grid(degrees)) {
        out << to_string(t) << "," << to_string(slice_volume(ToricSliceDivisor(degrees, t))) << "\n";
    }
    return out.str();
}

}  // namespace inob
