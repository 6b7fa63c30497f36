// Explicit sections certifying points of infinitesimal Newton-Okounkov bodies
// of box products: the square-free systems Lambda_d, their restriction maps
// psi_d, the sections Q_d, and the seven threefold witness divisors.
#ifndef INOB_SECTIONS_HPP
#define INOB_SECTIONS_HPP

#include "inob/poly.hpp"
#include "inob/valuation.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace inob {

/// Square-free monomials x_I with |I| = d, ordered lexicographically by I.
struct LambdaSystem {
    int n;
    int d;
    std::vector<std::vector<int>> index_sets;   // 0-based, increasing
    std::vector<HomoPoly> basis;

    LambdaSystem(int n, int d);
};

/// Matrix of psi_d in monomial bases: column j is the restriction of the j-th
/// basis monomial, rows are the degree-d monomials in the n-d+1 parameters in
/// descending lex order (so row 0 is w_1^d).
struct PsiMatrix {
    QMatrix matrix;
    std::vector<Exponent> rows;
    int rank = 0;

    bool full_rank() const { return rank == matrix.rows(); }
};

/// psi_d for an explicit parameterization: forms is n x (n-d+1), row i holds
/// the linear form f_i substituted for x_i.
PsiMatrix psi_matrix(const LambdaSystem& lambda, const QMatrix& forms);
/// psi_d with Y_d parameterized by the last n-d+1 columns of M^{-1}.
PsiMatrix psi_matrix(int n, int d, const LinearFlag& flag);

/// Exact claim that a point lies in the body: a divisor, its slice parameter,
/// the flag it was valued against, and the resulting point (t, nu).
struct MembershipCertificate {
    WeightedDivisor divisor{1};
    std::vector<Rat> degrees;
    Rat t;
    LinearFlag flag = LinearFlag::identity(1);
    QVector valuation;
    QVector point;
    std::vector<Rat> margins;
    std::uint64_t seed = 0;
};

/// Values the divisor and checks slice admissibility. Throws if the divisor is
/// not admissible.
MembershipCertificate certify(const WeightedDivisor& divisor, const std::vector<Rat>& degrees, const Rat& t,
                              const LinearFlag& flag, std::uint64_t seed);

/// Recomputes valuation, point and margins from the stored divisor and flag.
bool replay(const MembershipCertificate& cert);

nlohmann::json to_json(const MembershipCertificate& cert);
MembershipCertificate certificate_from_json(const nlohmann::json& j);

struct QdResult {
    LinearFlag flag;
    PsiMatrix psi;
    HomoPoly q;   // restriction to Y_d is exactly z_d^d
    int attempts = 0;
    MembershipCertificate certificate;   // divisor is q scaled to a monic leading term
};

/// Draws flags from the seed until psi_d has full rank, solves for Q_d and
/// certifies the point (d, d e_d) for the unit box. Throws GenericityError
/// when the budget runs out and std::logic_error if a post-condition fails.
QdResult construct_Qd(int n, int d, std::uint64_t seed);
QdResult construct_Qd(int n, int d, const LinearFlag& flag, std::uint64_t seed = 0);

/// The empty divisor at t = 0, certifying the origin.
MembershipCertificate origin_certificate(const std::vector<Rat>& degrees, const LinearFlag& flag, std::uint64_t seed = 0);
/// sum d_i {x_i = 0} at t = sum d_i, certifying (sum d_i, 0, ..., 0).
MembershipCertificate corner_certificate(const std::vector<Rat>& degrees, const LinearFlag& flag, std::uint64_t seed = 0);

/// The curves the threefold witnesses are assembled from.
struct ThreefoldCurves {
    LinearFlag flag;
    std::array<HomoPoly, 3> coordinate_lines;   // F_i = {x_i = 0}
    HomoPoly flag_line;                         // Y_2
    std::array<HomoPoly, 3> point_lines;        // l_i through Y_3 and p_i
    HomoPoly conic;                             // through p_1, p_2, p_3, tangent to Y_2 at Y_3
    int attempts = 0;
};

/// Curves for the first generic flag drawn from the seed.
ThreefoldCurves threefold_curves(std::uint64_t seed);
/// Curves for a given flag; throws GenericityError if the flag is special.
ThreefoldCurves threefold_curves(const LinearFlag& flag);

/// The seven vertices (t, nu) of the threefold body other than the origin and
/// (d1 + d2 + d3, 0, 0), in witness order.
std::vector<QVector> threefold_vertices(const Rat& d1, const Rat& d2, const Rat& d3);

/// Seven certificates, one per vertex of threefold_vertices. Requires integer
/// d1 >= d2 >= d3 > 0.
std::vector<MembershipCertificate> threefold_witnesses(const Rat& d1, const Rat& d2, const Rat& d3,
                                                       std::uint64_t seed);

}  // namespace inob

#endif  // INOB_SECTIONS_HPP
