// Candidate infinitesimal Newton-Okounkov bodies of box products, the cone
// predicates around them, and the end-to-end verification report.
#ifndef INOB_BODIES_HPP
#define INOB_BODIES_HPP

#include "inob/polytope.hpp"
#include "inob/sections.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace inob {

struct BoxProductClass {
    std::vector<Rat> degrees;

    explicit BoxProductClass(std::vector<Rat> degrees);   // requires d_i > 0
    int n() const { return static_cast<int>(degrees.size()); }
    bool sorted() const;   // d_1 >= ... >= d_n
    Rat volume() const;    // prod d_i
};

struct CandidateBody {
    Polytope body;
    std::string provenance;
    std::vector<Rat> degrees;
    /// Threefold bodies only: tetrahedron, triangular prism, trapezoid prism.
    std::vector<Polytope> pieces;
};

/// hull of 0, v_1, ..., v_n with v_k = k (e_1 + e_{k+1}) for k < n and v_n = n e_1.
CandidateBody simplex_body(int n);
/// Requires d1 >= d2 > 0.
CandidateBody trapezoid_body(const Rat& d1, const Rat& d2);
/// Requires d1 >= d2 >= d3 > 0.
CandidateBody threefold_body(const Rat& d1, const Rat& d2, const Rat& d3);

/// The expected piece volumes d3^3, (d1 + d2 - 2 d3) d3^2, (d1 - d3)(d2 - d3) d3.
std::vector<Rat> threefold_piece_volumes(const Rat& d1, const Rat& d2, const Rat& d3);

/// sum d_i h_i is pseudoeffective on the product iff every d_i >= 0.
bool is_pseff_product(const std::vector<Rat>& d);
/// sum c_i h_i - f E on the blow-up, f >= 0: pseudoeffective iff every c_i >= 0
/// and f <= sum c_i. Throws std::invalid_argument for f < 0.
bool is_pseff_blowup(const std::vector<Rat>& c, const Rat& f);
/// sum d_i; requires d_i > 0.
Rat width(const std::vector<Rat>& d);

/// Certificates for the known vertices of a catalog body, from one seed.
std::vector<MembershipCertificate> default_certificates(const CandidateBody& body, std::uint64_t seed);

/// Sample points for slice checks: branch points and midpoints.
std::vector<Rat> default_samples(const std::vector<Rat>& degrees);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool passed() const;
};

VerificationReport verify_body(const CandidateBody& body, const std::vector<Rat>& samples,
                               const std::vector<MembershipCertificate>& certificates);

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const CandidateBody& body);

/// OFF file with triangulated faces; 3-dimensional bodies only. Coordinates
/// are written as decimals for external viewers.
std::string to_off(const CandidateBody& body);
/// SVG drawing of a 2-dimensional body.
std::string to_svg(const CandidateBody& body);

}  // namespace inob

#endif  // INOB_BODIES_HPP
