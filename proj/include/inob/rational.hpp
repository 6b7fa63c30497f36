// Exact rational scalar and the Eigen dense types built on it.
#ifndef INOB_RATIONAL_HPP
#define INOB_RATIONAL_HPP

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace inob {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Expression templates are off so the type composes with Eigen.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

}  // namespace inob

namespace Eigen {

template <>
struct NumTraits<inob::Rat> : GenericNumTraits<inob::Rat> {
    using Real = inob::Rat;
    using NonInteger = inob::Rat;
    using Nested = inob::Rat;
    using Literal = inob::Rat;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 40,
        MulCost = 40
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace inob {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using QVector = Vector<Rat>;
using QMatrix = Matrix<Rat>;

/// Raised for malformed textual input; `position` is a 0-based offset into
/// the offending string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          message_(what),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }
    /// The message without the position suffix.
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

/// Parses "p/q" or "p" (optional sign, decimal digits only). Decimal points
/// and exponents are rejected so no value is silently rounded.
Rat parse_rational(std::string_view text);

/// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);
std::string to_string(const QVector& v);   // "(a,b,c)"

inline bool is_integer(const Rat& value) {
    return boost::multiprecision::denominator(value) == 1;
}

/// Floor of a rational as an integer-valued Rat.
Rat floor(const Rat& value);

QVector make_vector(std::initializer_list<Rat> coords);
QVector make_vector(const std::vector<Rat>& coords);
QVector zero_vector(Eigen::Index dim);

/// Lexicographic order on equal-length vectors.
bool lex_less(const QVector& a, const QVector& b);
bool equal(const QVector& a, const QVector& b);

struct LexLess {
    bool operator()(const QVector& a, const QVector& b) const { return lex_less(a, b); }
};

Rat factorial(int k);
Rat binomial(int n, int k);
Rat pow(const Rat& base, int exponent);

}  // namespace inob

#endif  // INOB_RATIONAL_HPP
