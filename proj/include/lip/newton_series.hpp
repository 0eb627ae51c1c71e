#pragma once

// Newton-series form of functions on an enumerated domain:
//   f(x) = sum_k a_k * prod_{i<k} (x - sigma(i)),
// with f LIP on the domain exactly when every a_k is an integer.

#include <algorithm>
#include <set>
#include <variant>
#include <vector>

#include "lip/polynomial.hpp"
#include "lip/sample.hpp"

namespace lip {

// Finite prefix sigma(1), ..., sigma(n) of an enumeration; entries distinct.
class Enumeration {
public:
    Enumeration() = default;
    explicit Enumeration(std::vector<Integer> prefix) : prefix_(std::move(prefix)) {
        std::set<Integer> seen;
        for (const auto& v : prefix_) {
            if (!seen.insert(v).second) throw DomainError("enumeration repeats " + v.str());
        }
    }

    // 0, 1, -1, 2, -2, ...
    static Enumeration standard_integers(std::size_t n) {
        std::vector<Integer> out;
        out.reserve(n);
        for (std::size_t k = 1; k <= n; ++k) out.push_back(standard_integer_at(k));
        return Enumeration(std::move(out));
    }
    // 1, 2, 3, ...
    static Enumeration naturals(std::size_t n) {
        std::vector<Integer> out;
        out.reserve(n);
        for (std::size_t k = 1; k <= n; ++k) out.emplace_back(k);
        return Enumeration(std::move(out));
    }

    // sigma(k) of the standard bijection N -> Z, k >= 1.
    static Integer standard_integer_at(std::size_t k) {
        if (k == 1) return 0;
        if (k % 2 == 0) return Integer(k / 2);
        return -Integer((k - 1) / 2);
    }
    // Inverse of standard_integer_at.
    static Integer standard_integer_index(const Integer& x) {
        if (x == 0) return 1;
        if (x > 0) return 2 * x;
        return -2 * x + 1;
    }

    // The given x values reordered as the standard enumeration visits them.
    static Enumeration standard_order(std::vector<Integer> xs) {
        std::sort(xs.begin(), xs.end(), [](const Integer& a, const Integer& b) {
            return standard_integer_index(a) < standard_integer_index(b);
        });
        return Enumeration(std::move(xs));
    }

    const std::vector<Integer>& prefix() const { return prefix_; }
    std::size_t size() const { return prefix_.size(); }
    const Integer& operator[](std::size_t i) const { return prefix_[i]; }

    // 0-based position, if present.
    std::optional<std::size_t> position(const Integer& x) const {
        auto it = std::find(prefix_.begin(), prefix_.end(), x);
        if (it == prefix_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - prefix_.begin());
    }

    friend bool operator==(const Enumeration&, const Enumeration&) = default;

private:
    std::vector<Integer> prefix_;
};

class NewtonSeries {
public:
    NewtonSeries() = default;
    NewtonSeries(Enumeration sigma, std::vector<Integer> coeffs)
        : sigma_(std::move(sigma)), coeffs_(std::move(coeffs)) {
        if (sigma_.size() != coeffs_.size()) {
            throw DomainError("newton series: " + std::to_string(coeffs_.size()) + " coefficients for " +
                              std::to_string(sigma_.size()) + " enumeration entries");
        }
    }

    const Enumeration& enumeration() const { return sigma_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    friend bool operator==(const NewtonSeries&, const NewtonSeries&) = default;

private:
    Enumeration sigma_;
    std::vector<Integer> coeffs_;
};

// Truncated sum at x, nested Horner-style:
//   a0 + (x - s1)(a1 + (x - s2)(a2 + ...)).
inline Integer newton_eval(const NewtonSeries& ns, const Integer& x) {
    const auto& a = ns.coeffs();
    if (a.empty()) return 0;
    Integer acc = a.back();
    for (std::size_t k = a.size() - 1; k-- > 0;) acc = acc * (x - ns.enumeration()[k]) + a[k];
    return acc;
}

inline IntPolynomial to_polynomial(const NewtonSeries& ns) {
    const auto& a = ns.coeffs();
    if (a.empty()) return {};
    IntPolynomial acc = IntPolynomial::constant(a.back());
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        acc = acc * IntPolynomial::linear_factor(ns.enumeration()[k]) + IntPolynomial::constant(a[k]);
    }
    return acc;
}

// First coefficient of the recursion that is not an integer.
struct NewtonFailure {
    std::size_t index;  // k of the offending a_k
    Rational value;

    friend bool operator==(const NewtonFailure&, const NewtonFailure&) = default;
};

using NewtonDecomposition = std::variant<NewtonSeries, NewtonFailure>;

// a_{n} = (f(m) - f_n(m)) / prod_{i<n} (m - sigma(i)) with m = sigma(n),
// stopping at the first non-integer coefficient.
inline NewtonDecomposition newton_decompose(const Enumeration& sigma, const std::vector<Integer>& values) {
    if (sigma.size() != values.size()) {
        throw DomainError("newton decomposition: " + std::to_string(values.size()) + " values for " +
                          std::to_string(sigma.size()) + " enumeration entries");
    }
    std::vector<Integer> coeffs;
    coeffs.reserve(values.size());
    for (std::size_t n = 0; n < values.size(); ++n) {
        const Integer& m = sigma[n];
        // Partial sum at m and the product prod_{i<n} (m - sigma(i)), both by
        // the same forward pass.
        Integer partial = 0;
        Integer basis = 1;
        for (std::size_t k = 0; k < n; ++k) {
            partial += coeffs[k] * basis;
            basis *= m - sigma[k];
        }
        Integer residual = values[n] - partial;
        if (residual % basis != 0) return NewtonFailure{n, make_rational(residual, basis)};
        coeffs.push_back(residual / basis);
    }
    return NewtonSeries(sigma, std::move(coeffs));
}

// Sample decomposed along the standard enumeration order of its x values.
inline NewtonDecomposition newton_decompose(const Sample& s) {
    auto sigma = Enumeration::standard_order(s.xs());
    std::vector<Integer> values;
    values.reserve(sigma.size());
    for (const auto& x : sigma.prefix()) values.push_back(s.at(x));
    return newton_decompose(sigma, values);
}

}  // namespace lip
