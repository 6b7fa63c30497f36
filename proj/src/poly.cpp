#include "inob/poly.hpp"

#include "inob/linalg.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace inob {

int total_degree(const Exponent& e) {
    int d = 0;
    for (auto a : e) d += a;
    return d;
}

HomoPoly::HomoPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars) {
        throw std::invalid_argument("HomoPoly: nvars must be in 1.." + std::to_string(kMaxVars));
    }
}

HomoPoly::HomoPoly(int nvars, const Exponent& e, Rat coefficient) : HomoPoly(nvars) {
    for (int i = nvars; i < kMaxVars; ++i) {
        if (e[static_cast<std::size_t>(i)] != 0) throw std::invalid_argument("HomoPoly: exponent outside nvars");
    }
    add_term(e, coefficient);
}

HomoPoly HomoPoly::constant(int nvars, const Rat& c) { return HomoPoly(nvars, Exponent{}, c); }

HomoPoly HomoPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("HomoPoly::variable: index out of range");
    Exponent e{};
    e[static_cast<std::size_t>(index)] = 1;
    return HomoPoly(nvars, e);
}

HomoPoly HomoPoly::linear_form(const QVector& coeffs) {
    HomoPoly out(static_cast<int>(coeffs.size()));
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        Exponent e{};
        e[static_cast<std::size_t>(i)] = 1;
        out.add_term(e, coeffs[i]);
    }
    return out;
}

Rat HomoPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void HomoPoly::add_term(const Exponent& e, const Rat& c) {
    if (c == 0) return;
    const int d = total_degree(e);
    if (!terms_.empty() && d != degree_) throw std::invalid_argument("HomoPoly: result would not be homogeneous");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    degree_ = terms_.empty() ? -1 : d;
}

HomoPoly& HomoPoly::operator+=(const HomoPoly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("HomoPoly: variable count mismatch");
    if (!is_zero() && !other.is_zero() && other.degree_ != degree_) {
        throw std::invalid_argument("HomoPoly: cannot add polynomials of different degrees");
    }
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

HomoPoly& HomoPoly::operator-=(const HomoPoly& other) { return *this += other * Rat(-1); }

HomoPoly& HomoPoly::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        degree_ = -1;
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("HomoPoly: variable count mismatch");
    HomoPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e{};
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Rat HomoPoly::evaluate(const QVector& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("HomoPoly::evaluate: dimension mismatch");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i) term *= inob::pow(point[i], e[static_cast<std::size_t>(i)]);
        total += term;
    }
    return total;
}

HomoPoly pow(const HomoPoly& p, int exponent) {
    if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
    HomoPoly out = HomoPoly::constant(p.nvars(), 1);
    for (int i = 0; i < exponent; ++i) out = out * p;
    return out;
}

HomoPoly substitute(const HomoPoly& p, const QMatrix& l) {
    if (l.rows() != p.nvars()) throw std::invalid_argument("substitute: matrix rows must equal nvars");
    const int k = static_cast<int>(l.cols());
    std::vector<HomoPoly> forms;
    std::vector<std::vector<HomoPoly>> powers(static_cast<std::size_t>(p.nvars()));
    for (int i = 0; i < p.nvars(); ++i) {
        forms.push_back(HomoPoly::linear_form(l.row(i).transpose()));
        powers[static_cast<std::size_t>(i)].push_back(HomoPoly::constant(k, 1));
    }
    auto power_of = [&](int i, int a) -> const HomoPoly& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        while (static_cast<int>(cache.size()) <= a) cache.push_back(cache.back() * forms[static_cast<std::size_t>(i)]);
        return cache[static_cast<std::size_t>(a)];
    };
    HomoPoly out(k);
    for (const auto& [e, c] : p.terms()) {
        HomoPoly term = HomoPoly::constant(k, c);
        for (int i = 0; i < p.nvars(); ++i) {
            if (e[static_cast<std::size_t>(i)] > 0) term = term * power_of(i, e[static_cast<std::size_t>(i)]);
        }
        out += term;
    }
    return out;
}

HomoPoly compose_coordinates(const HomoPoly& p, const QMatrix& m) {
    if (m.rows() != p.nvars()) throw std::invalid_argument("compose_coordinates: matrix rows must equal nvars");
    if (m.cols() > m.rows()) throw std::invalid_argument("compose_coordinates: too many target coordinates");
    if (rank(m) < m.cols()) {
        throw std::domain_error(m.rows() == m.cols() ? "compose_coordinates: matrix is singular"
                                                     : "compose_coordinates: parameterization is rank deficient");
    }
    return substitute(p, m);
}

std::string to_string(const HomoPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const Rat magnitude = negative ? Rat(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string vars;
        for (int i = 0; i < p.nvars(); ++i) {
            const int a = e[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (a > 1) vars += "^" + std::to_string(a);
        }
        if (vars.empty()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += vars;
        } else {
            out += to_string(magnitude) + "*" + vars;
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

    HomoPoly parse() {
        struct Term {
            Exponent e{};
            Rat c;
            std::size_t pos;
        };
        std::vector<Term> terms;
        int max_index = 0;
        skip_ws();
        bool negative = false;
        if (peek('+') || peek('-')) {
            negative = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        while (true) {
            Term t;
            t.pos = pos_;
            t.c = negative ? Rat(-1) : Rat(1);
            if (at_digit()) {
                t.c *= read_rational();
                skip_ws();
                if (peek('*')) {
                    ++pos_;
                    skip_ws();
                    read_variable(t.e, max_index);
                }
            } else {
                read_variable(t.e, max_index);
            }
            skip_ws();
            while (peek('*')) {
                ++pos_;
                skip_ws();
                read_variable(t.e, max_index);
                skip_ws();
            }
            terms.push_back(t);
            if (pos_ == text_.size()) break;
            if (!peek('+') && !peek('-')) fail("expected '+', '-', '*' or end of input");
            negative = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        int nvars = nvars_ > 0 ? nvars_ : std::max(2, max_index);
        if (max_index > nvars) {
            throw ParseError("variable x" + std::to_string(max_index) + " exceeds the " + std::to_string(nvars) +
                                 " available variables",
                             var_pos_);
        }
        HomoPoly out(nvars);
        const int degree = total_degree(terms.front().e);
        for (const Term& t : terms) {
            if (total_degree(t.e) != degree) {
                throw ParseError("polynomial is not homogeneous: term of degree " +
                                     std::to_string(total_degree(t.e)) + ", expected " + std::to_string(degree),
                                 t.pos);
            }
            out += HomoPoly(nvars, t.e, t.c);
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::string where = pos_ < text_.size() ? " near '" + std::string(1, text_[pos_]) + "'" : " at end of input";
        throw ParseError("invalid polynomial: " + msg + where, pos_);
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
    bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string digits() {
        if (!at_digit()) fail("expected digits");
        std::string out;
        while (at_digit()) out.push_back(text_[pos_++]);
        return out;
    }

    Rat read_rational() {
        const std::size_t start = pos_;
        std::string s = digits();
        if (peek('/')) {
            ++pos_;
            s += "/" + digits();
        }
        try {
            return parse_rational(s);
        } catch (const ParseError& e) {
            throw ParseError(std::string("invalid polynomial coefficient: ") + e.message(), start);
        }
    }

    void read_variable(Exponent& e, int& max_index) {
        if (!peek('x')) fail("expected a variable x<i>");
        const std::size_t start = pos_;
        ++pos_;
        const std::string idx = digits();
        const int index = std::stoi(idx);
        if (index < 1 || index > kMaxVars || (nvars_ > 0 && index > nvars_)) {
            throw ParseError("invalid polynomial: variable index x" + idx + " out of range", start);
        }
        if (index > max_index) {
            max_index = index;
            var_pos_ = start;
        }
        int power = 1;
        skip_ws();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            power = std::stoi(digits());
        }
        e[static_cast<std::size_t>(index - 1)] = static_cast<std::uint16_t>(e[static_cast<std::size_t>(index - 1)] + power);
    }

    std::string_view text_;
    int nvars_;
    std::size_t pos_ = 0;
    std::size_t var_pos_ = 0;
};

}  // namespace

HomoPoly parse_poly(std::string_view text, int nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("parse_poly: nvars out of range");
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    if (text.substr(first) == "0") return HomoPoly(nvars > 0 ? nvars : 2);
    return PolyParser(text, nvars).parse();
}

}  // namespace inob
