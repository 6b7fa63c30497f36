#include "inob/rational.hpp"

#include <cctype>

namespace inob {

namespace {

// Consumes [+-]?digits starting at pos; returns the digit string with sign.
std::string read_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
    std::string out;
    if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') out.push_back('-');
        ++pos;
    }
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        out.push_back(text[pos]);
        ++pos;
    }
    if (pos == start) {
        if (pos < text.size()) {
            throw ParseError("invalid rational '" + std::string(text) + "': unexpected '" +
                                 std::string(1, text[pos]) + "'",
                             pos);
        }
        throw ParseError("invalid rational '" + std::string(text) + "': expected digits", pos);
    }
    return out;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::size_t pos = 0;
    const std::string num = read_integer(text, pos, true);
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_integer(text, pos, false);
    }
    if (pos != text.size()) {
        throw ParseError("invalid rational '" + std::string(text) + "': unexpected '" +
                             std::string(1, text[pos]) + "'",
                         pos);
    }
    BigInt q(den);
    if (q == 0) {
        throw ParseError("invalid rational '" + std::string(text) + "': zero denominator",
                         text.find('/') + 1);
    }
    return Rat(BigInt(num), q);
}

std::string to_string(const Rat& value) {
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const QVector& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

Rat floor(const Rat& value) {
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return Rat(q);
}

QVector make_vector(std::initializer_list<Rat> coords) {
    QVector v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (const Rat& c : coords) v[i++] = c;
    return v;
}

QVector make_vector(const std::vector<Rat>& coords) {
    QVector v(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) v[static_cast<Eigen::Index>(i)] = coords[i];
    return v;
}

QVector zero_vector(Eigen::Index dim) {
    QVector v(dim);
    v.setZero();
    return v;
}

bool lex_less(const QVector& a, const QVector& b) {
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

bool equal(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

Rat factorial(int k) {
    Rat out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

Rat binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rat out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

Rat pow(const Rat& base, int exponent) {
    Rat out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

}  // namespace inob
