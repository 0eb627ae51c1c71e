#pragma once

// Dense univariate polynomials over Integer or Rational, stored low-to-high.
// The zero polynomial is the empty coefficient sequence.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lip/integer.hpp"

namespace lip {

// Degree of a polynomial; the zero polynomial has degree minus infinity,
// which orders below every finite degree.
class Degree {
public:
    static constexpr Degree minus_infinity() { return Degree(); }
    static constexpr Degree of(std::size_t d) { return Degree(d); }

    constexpr bool is_finite() const { return finite_; }
    constexpr std::size_t value() const {
        if (!finite_) throw DomainError("degree of the zero polynomial is minus infinity");
        return value_;
    }

    friend constexpr bool operator==(const Degree&, const Degree&) = default;
    friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    std::string str() const { return finite_ ? std::to_string(value_) : "-inf"; }

private:
    constexpr Degree() = default;
    constexpr explicit Degree(std::size_t d) : finite_(true), value_(d) {}

    bool finite_ = false;
    std::size_t value_ = 0;
};

template <class Coeff>
class Polynomial {
public:
    using coefficient_type = Coeff;

    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }
    static Polynomial x() { return Polynomial(std::vector<Coeff>{Coeff(0), Coeff(1)}); }
    // x - root
    static Polynomial linear_factor(const Coeff& root) {
        return Polynomial(std::vector<Coeff>{Coeff(-root), Coeff(1)});
    }

    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Degree degree() const {
        return coeffs_.empty() ? Degree::minus_infinity() : Degree::of(coeffs_.size() - 1);
    }
    // Coefficient of x^i; zero past the end.
    Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
    Coeff leading() const { return coeffs_.empty() ? Coeff(0) : coeffs_.back(); }

    // Horner. Works for any argument type the coefficients combine with.
    template <class Arg>
    auto operator()(const Arg& x) const {
        using R = decltype(std::declval<Coeff>() * std::declval<Arg>());
        R acc = R(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const Coeff& s, const Polynomial& p) {
        std::vector<Coeff> out = p.coeffs_;
        for (auto& c : out) c *= s;
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
    return RatPolynomial(std::move(out));
}

// Embedding into Z[x] when every coefficient has denominator 1.
inline std::optional<IntPolynomial> as_integer(const RatPolynomial& p) {
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (!is_integral(c)) return std::nullopt;
        out.push_back(numerator(c));
    }
    return IntPolynomial(std::move(out));
}

inline bool is_integer(const RatPolynomial& p) { return as_integer(p).has_value(); }

// p(q(x)), by Horner over polynomials.
template <class Coeff>
Polynomial<Coeff> compose(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q) {
    Polynomial<Coeff> acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial<Coeff>::constant(*it);
    return acc;
}

// (delta p)(x) = p(x) - p(x - 1).
template <class Coeff>
Polynomial<Coeff> discrete_derivative(const Polynomial<Coeff>& p) {
    return p - compose(p, Polynomial<Coeff>::linear_factor(Coeff(1)));
}

// prod (x - r) over the given roots.
template <class Coeff, class Range>
Polynomial<Coeff> product_of_linear_factors(const Range& roots) {
    Polynomial<Coeff> acc = Polynomial<Coeff>::constant(Coeff(1));
    for (const auto& r : roots) acc = acc * Polynomial<Coeff>::linear_factor(Coeff(r));
    return acc;
}

namespace detail {

inline std::string format_integer_terms(const std::vector<Integer>& c) {
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        const Integer& a = c[k];
        if (a == 0) continue;
        std::string term;
        if (k == 0) {
            term = a.str();
        } else {
            if (a == 1) {
            } else if (a == -1) {
                term = "-";
            } else {
                term = a.str();
            }
            term += k == 1 ? "x" : "x^" + std::to_string(k);
        }
        if (!out.empty() && a > 0) out += "+";
        out += term;
    }
    return out;
}

}  // namespace detail

inline std::string to_string(const IntPolynomial& p) { return detail::format_integer_terms(p.coeffs()); }

// Common denominator pulled out front: (x^2+x)/2, x^2/2, x^2+1.
inline std::string to_string(const RatPolynomial& p) {
    Integer den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, denominator(c));
    std::vector<Integer> scaled;
    scaled.reserve(p.coeffs().size());
    std::size_t nonzero = 0;
    for (const auto& c : p.coeffs()) {
        scaled.push_back(numerator(c) * (den / denominator(c)));
        if (c != 0) ++nonzero;
    }
    std::string body = detail::format_integer_terms(scaled);
    if (den == 1) return body;
    if (nonzero > 1) body = "(" + body + ")";
    return body + "/" + den.str();
}

}  // namespace lip
