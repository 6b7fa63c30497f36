// Divisor polytopes on the blow-up of P^{n-1} at its n torus-fixed points,
// and the piecewise-polynomial volume function of their slices.
#ifndef INOB_TORIC_HPP
#define INOB_TORIC_HPP

#include "inob/polytope.hpp"
#include "inob/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace inob {

/// Fan of the blow-up: rays f_1..f_{n-1} (standard basis of R^{n-1}),
/// f_n = -(f_1 + ... + f_{n-1}), and the exceptional rays e_i = -f_i.
struct BlowupFan {
    int n;
    std::vector<QVector> f;   // n rays, strict transforms of coordinate hyperplanes
    std::vector<QVector> e;   // n rays, exceptional divisors

    explicit BlowupFan(int n);
};

/// t * H - sum_i (t - d_i) E_i on the blow-up, with 0 <= t <= sum d_i.
class ToricSliceDivisor {
public:
    ToricSliceDivisor(std::vector<Rat> degrees, Rat t);

    int n() const { return static_cast<int>(degrees_.size()); }
    const std::vector<Rat>& degrees() const { return degrees_; }
    const Rat& t() const { return t_; }

    /// Coefficient of F_i in the torus-invariant representative (t/n).
    Rat f_coefficient() const;
    /// Coefficient of E_i (d_i - t/n).
    Rat e_coefficient(int i) const;

private:
    std::vector<Rat> degrees_;
    Rat t_;
};

/// { m : <m, f_i> >= -t/n, <m, e_i> >= t/n - d_i }, in dimension n-1.
Polytope divisor_polytope(const ToricSliceDivisor& divisor);

/// The translate { 0 <= m_i <= d_i, t - d_n <= sum m_i <= t } of the above.
Polytope divisor_polytope_translated(const ToricSliceDivisor& divisor);

/// Volume of { 0 <= m_i <= d_i, sum m_i <= t } in R^{d.size()}, by
/// inclusion-exclusion over the corners of the box.
Rat box_slice_volume(const std::vector<Rat>& box, const Rat& t);

/// A(t) - A(t - d_n) with A taken over d_1..d_{n-1}.
Rat slice_volume(const ToricSliceDivisor& divisor);

/// Sorted distinct subset sums of d (0 and the total included).
std::vector<Rat> branch_points(const std::vector<Rat>& d);

/// Coefficients c_0..c_k of the polynomial through (nodes[i], values[i]),
/// in the shifted variable (x - origin).
std::vector<Rat> interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values, const Rat& origin);
Rat evaluate(const std::vector<Rat>& coefficients, const Rat& origin, const Rat& x);

/// Exact integral over [lo, hi] of a function that is a polynomial of
/// degree <= degree between consecutive breakpoints.
Rat integrate_piecewise(const std::function<Rat(const Rat&)>& f, const Rat& lo, const Rat& hi,
                        const std::vector<Rat>& breakpoints, int degree);

/// Integral of the slice volume over t in [0, sum d]. Cross-checked against
/// the integral of A over [d_1 + ... + d_{n-1}, sum d]; a mismatch throws.
Rat volume_integral(const std::vector<Rat>& degrees);

/// Branch points and midpoints of consecutive branch points, sorted.
std::vector<Rat> sample_grid(const std::vector<Rat>& degrees);

/// "t,volume" table sampled on sample_grid(degrees).
std::string slice_volume_csv(const std::vector<Rat>& degrees);

}  // namespace inob

#endif  // INOB_TORIC_HPP
