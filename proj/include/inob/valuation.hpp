// Linear flags on P^{n-1}, the flag valuation they induce on divisors,
// multiplicities at points, and the slice admissibility test.
#ifndef INOB_VALUATION_HPP
#define INOB_VALUATION_HPP

#include "inob/poly.hpp"
#include "inob/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace inob {

using Rng = std::mt19937_64;

/// Resampling budget for randomized genericity checks.
inline constexpr int kResampleBudget = 16;

/// Thrown when no generic enough choice was found within the budget.
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A full flag P^{n-1} = Y_1 > Y_2 > ... > Y_n stored as new coordinates
/// z = M x, with Y_i = { z_1 = ... = z_{i-1} = 0 }.
class LinearFlag {
public:
    explicit LinearFlag(QMatrix m);

    static LinearFlag identity(int n);
    /// Entries p/q drawn uniformly with 1 <= |p| <= 32, 1 <= q <= 4;
    /// singular draws are redrawn.
    static LinearFlag random(int n, Rng& rng);

    int n() const { return static_cast<int>(m_.rows()); }
    const QMatrix& matrix() const { return m_; }
    /// Columns are the coordinate points of the z-frame in x-coordinates.
    const QMatrix& inverse() const { return inverse_; }

    /// n x (n-i+1) matrix whose columns span Y_i (1-based i).
    QMatrix parameterization(int i) const;
    /// Coefficients (in x) of the linear form z_k (1-based k).
    QVector coordinate_form(int k) const;
    /// The point Y_n.
    QVector point() const;

private:
    QMatrix m_;
    QMatrix inverse_;
};

/// Valuation vector (nu_2, ..., nu_n) of a polynomial divisor.
class ValuationVector {
public:
    ValuationVector() = default;
    explicit ValuationVector(std::vector<int> components) : nu_(std::move(components)) {}

    std::size_t size() const { return nu_.size(); }
    int operator[](std::size_t i) const { return nu_[i]; }
    const std::vector<int>& components() const { return nu_; }
    int sum() const;
    QVector to_vector() const;

    friend ValuationVector operator+(const ValuationVector& a, const ValuationVector& b);
    friend bool operator==(const ValuationVector&, const ValuationVector&) = default;

private:
    std::vector<int> nu_;
};

/// "(a,b,...)".
std::string to_string(const ValuationVector& v);

/// Iterated order of vanishing along the flag: order along Y_2, restrict,
/// order along Y_3 inside Y_2, and so on. Throws for the zero polynomial.
ValuationVector flag_valuation(const HomoPoly& p, const LinearFlag& flag);

/// Multiplicity of {p = 0} at a projective point. chart selects the
/// dehomogenizing coordinate (must be nonzero at the point); -1 picks the
/// first nonzero coordinate.
int mult_at_point(const HomoPoly& p, const QVector& point, int chart = -1);

/// The i-th coordinate point of P^{n-1} (0-based i).
QVector coordinate_point(int n, int i);

/// Effective Q-divisor sum_k w_k {P_k = 0} with positive weights.
struct WeightedDivisor {
    struct Component {
        Rat weight;
        HomoPoly poly;
    };
    int nvars;
    std::vector<Component> components;

    explicit WeightedDivisor(int n) : nvars(n) {}
    WeightedDivisor& add(const Rat& weight, const HomoPoly& poly);

    Rat degree() const;
    /// Flag valuation extended linearly over components.
    QVector valuation(const LinearFlag& flag) const;
    Rat mult_at_point(const QVector& point) const;
};

struct Admissibility {
    bool admissible = false;
    /// mult_{p_i} - max(t - d_i, 0) for each coordinate point p_i.
    std::vector<Rat> margins;
};

/// Whether a degree-t divisor has multiplicity >= max(t - d_i, 0) at each
/// coordinate point p_i. A degree other than t is an error.
Admissibility admissible_in_slice(const WeightedDivisor& divisor, const std::vector<Rat>& degrees, const Rat& t);
Admissibility admissible_in_slice(const HomoPoly& p, const std::vector<Rat>& degrees, const Rat& t);

}  // namespace inob

#endif  // INOB_VALUATION_HPP
