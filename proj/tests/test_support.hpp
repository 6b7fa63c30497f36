// Small seeded generators shared by the test suites.
#ifndef INOB_TEST_SUPPORT_HPP
#define INOB_TEST_SUPPORT_HPP

#include "inob/poly.hpp"
#include "inob/polytope.hpp"
#include "inob/rational.hpp"
#include "inob/valuation.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace inob::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) {
        return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// p/q with |p| <= num_bound, 1 <= q <= den_bound.
    Rat rational(int num_bound, int den_bound) {
        return Rat(integer(-num_bound, num_bound)) / Rat(integer(1, den_bound));
    }

    Rat positive_rational(int num_bound, int den_bound) {
        return Rat(integer(1, num_bound)) / Rat(integer(1, den_bound));
    }

    QVector point(Eigen::Index dim, int num_bound, int den_bound) {
        QVector v(dim);
        for (Eigen::Index i = 0; i < dim; ++i) v[i] = rational(num_bound, den_bound);
        return v;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Random integer matrix with determinant +-1, built from elementary moves.
inline QMatrix random_unimodular(Gen& g, Eigen::Index dim) {
    QMatrix m = QMatrix::Identity(dim, dim);
    if (dim < 2) {
        if (dim == 1 && g.integer(0, 1)) m(0, 0) = -1;
        return m;
    }
    for (int step = 0; step < 3 * dim; ++step) {
        const auto i = static_cast<Eigen::Index>(g.integer(0, static_cast<int>(dim) - 1));
        auto j = static_cast<Eigen::Index>(g.integer(0, static_cast<int>(dim) - 2));
        if (j >= i) ++j;
        const int c = g.integer(-2, 2);
        m.row(i) += Rat(c) * m.row(j);
        if (g.integer(0, 3) == 0) m.row(i).swap(m.row(j));
    }
    return m;
}

/// Nonzero homogeneous polynomial with up to max_terms random terms.
inline HomoPoly random_poly(Gen& g, int n, int degree, int max_terms = 4) {
    HomoPoly out(n);
    while (out.is_zero()) {
        const int terms = g.integer(1, max_terms);
        for (int k = 0; k < terms; ++k) {
            Exponent e{};
            int left = degree;
            for (int i = 0; i + 1 < n; ++i) {
                const int a = g.integer(0, left);
                e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(a);
                left -= a;
            }
            e[static_cast<std::size_t>(n - 1)] = static_cast<std::uint16_t>(left);
            Rat c = g.rational(4, 3);
            if (c == 0) c = 1;
            out += HomoPoly(n, e, c);
        }
    }
    return out;
}

/// Lex-minimal (z_1, ..., z_{n-1}) exponent over the terms of p in z-coordinates.
inline std::vector<int> lex_min_oracle(const HomoPoly& p, const LinearFlag& flag) {
    const HomoPoly z = compose_coordinates(p, flag.inverse());
    std::vector<int> best;
    for (const auto& [e, c] : z.terms()) {
        std::vector<int> head(e.begin(), e.begin() + (p.nvars() - 1));
        if (best.empty() || head < best) best = head;
    }
    return best;
}

/// Volume of { 0 <= m_i <= box_i, sum m_i <= t }, cut out by halfspaces and
/// measured by the polytope engine.
inline Rat box_slab_polytope_volume(const std::vector<Rat>& box, const Rat& t) {
    const auto dim = static_cast<Eigen::Index>(box.size());
    std::vector<Halfspace> hs;
    QVector ones(dim);
    ones.setConstant(Rat(1));
    for (Eigen::Index i = 0; i < dim; ++i) {
        QVector u = zero_vector(dim);
        u[i] = 1;
        hs.emplace_back(u, Rat(0));
        hs.emplace_back(-u, -box[static_cast<std::size_t>(i)]);
    }
    hs.emplace_back(-ones, -t);
    return volume(intersect_halfspaces(dim, hs));
}

}  // namespace inob::testing

#endif  // INOB_TEST_SUPPORT_HPP
