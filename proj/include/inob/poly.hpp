// Sparse homogeneous polynomials over the rationals.
#ifndef INOB_POLY_HPP
#define INOB_POLY_HPP

#include "inob/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace inob {

inline constexpr int kMaxVars = 8;

/// Dense exponent vector; slots at index >= nvars are always zero.
using Exponent = std::array<std::uint16_t, kMaxVars>;

int total_degree(const Exponent& e);

/// Homogeneous polynomial in x1..x_nvars. The zero polynomial is a
/// distinguished value with degree -1 and no terms.
class HomoPoly {
public:
    /// Terms ordered lexicographically descending (x1 most significant).
    using TermMap = std::map<Exponent, Rat, std::greater<Exponent>>;

    explicit HomoPoly(int nvars);   // zero polynomial
    HomoPoly(int nvars, const Exponent& e, Rat coefficient = 1);

    static HomoPoly constant(int nvars, const Rat& c);
    static HomoPoly variable(int nvars, int index);   // 0-based index
    /// sum_i coeffs[i] * x_{i+1}
    static HomoPoly linear_form(const QVector& coeffs);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rat coefficient(const Exponent& e) const;

    HomoPoly& operator+=(const HomoPoly& other);
    HomoPoly& operator-=(const HomoPoly& other);
    HomoPoly& operator*=(const Rat& scalar);

    friend HomoPoly operator+(HomoPoly a, const HomoPoly& b) { return a += b; }
    friend HomoPoly operator-(HomoPoly a, const HomoPoly& b) { return a -= b; }
    friend HomoPoly operator*(HomoPoly a, const Rat& s) { return a *= s; }
    friend HomoPoly operator*(const Rat& s, HomoPoly a) { return a *= s; }
    friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b);
    friend bool operator==(const HomoPoly& a, const HomoPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Value at a point (length nvars).
    Rat evaluate(const QVector& point) const;

private:
    void add_term(const Exponent& e, const Rat& c);

    int nvars_;
    int degree_ = -1;
    TermMap terms_;
};

HomoPoly pow(const HomoPoly& p, int exponent);

/// p(L y): substitutes x_i = sum_j L(i, j) y_j. The result has L.cols()
/// variables. No rank requirement.
HomoPoly substitute(const HomoPoly& p, const QMatrix& l);

/// Coordinate change x = M z. A square M must be invertible; an n x k
/// parameterization must have rank k.
HomoPoly compose_coordinates(const HomoPoly& p, const QMatrix& m);

/// Canonical text: terms in descending lex order, "c*x1^a1*...*xn^an" with
/// unit coefficients and unit exponents elided, joined by " + " / " - ".
std::string to_string(const HomoPoly& p);

/// Parses the text format. nvars = 0 infers max(2, largest variable index).
/// Throws ParseError with the offending position; non-homogeneous input is
/// an error.
HomoPoly parse_poly(std::string_view text, int nvars = 0);

}  // namespace inob

#endif  // INOB_POLY_HPP
