#pragma once

// LIP-consistency of finite samples: a sample is consistent with some LIP
// function exactly when its full interpolant lies in Z[x] (every subset then
// inherits an integer interpolant). When it does not, a circuit, a minimal
// subset with non-integer interpolant, certifies the failure.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lip/interpolation.hpp"

namespace lip {

// Minimal obstruction X: f_X not in Z[x], but f_{X \ {a}} in Z[x] for each a.
struct Circuit {
    std::vector<Integer> elements;  // sorted ascending
    Rational leading_coeff;         // coefficient of x^{|X|-1} in f_X
    Integer denominator;            // of leading_coeff, >= 2

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct Consistent {
    IntPolynomial witness;

    friend bool operator==(const Consistent&, const Consistent&) = default;
};

struct Inconsistent {
    Circuit circuit;

    friend bool operator==(const Inconsistent&, const Inconsistent&) = default;
};

using LipVerdict = std::variant<Consistent, Inconsistent>;

inline bool is_consistent(const LipVerdict& v) { return std::holds_alternative<Consistent>(v); }

// First pair x1 < x2 (lexicographic over the sorted sample) with
// (x2 - x1) not dividing f(x2) - f(x1); nullopt when every pair passes.
inline std::optional<std::pair<Integer, Integer>> pairwise_divisibility_check(const Sample& s) {
    const auto& p = s.points();
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if ((p[j].y - p[i].y) % (p[j].x - p[i].x) != 0) return std::make_pair(p[i].x, p[j].x);
        }
    }
    return std::nullopt;
}

namespace detail {

inline bool has_integer_interpolant(const std::vector<Point>& pts) {
    if (pts.size() <= 1) return true;
    return is_integer(interpolate(Sample(pts)));
}

inline Circuit make_circuit(const Sample& x_set) {
    auto poly = interpolate(x_set);
    Rational c = poly.coeff(x_set.size() - 1);
    return Circuit{x_set.xs(), c, lip::denominator(c)};
}

}  // namespace detail

// Greedy shrink: delete the smallest x whose removal keeps the interpolant
// non-integer, until no deletion does.
inline Circuit find_circuit(const Sample& s) {
    if (is_integer(interpolate(s))) {
        throw PreconditionError("find_circuit: the sample has an integer interpolant");
    }
    std::vector<Point> current = s.points();
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (std::size_t i = 0; i < current.size(); ++i) {
            std::vector<Point> candidate = current;
            candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
            if (!detail::has_integer_interpolant(candidate)) {
                current = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    return detail::make_circuit(Sample(std::move(current)));
}

inline LipVerdict lip_check(const Sample& s) {
    auto poly = interpolate(s);
    if (auto integral = as_integer(poly)) return Consistent{std::move(*integral)};
    return Inconsistent{find_circuit(s)};
}

// Checks every circuit invariant of c against the sample's values:
// non-integer top coefficient equal to the claimed one, denominator >= 2 and
// as claimed, elements congruent modulo it, and minimality.
inline bool validate_circuit(const Circuit& c, const Sample& s) {
    if (c.elements.empty()) return false;
    for (const auto& x : c.elements) {
        if (!s.contains(x)) throw DomainError("circuit element " + x.str() + " is not in the sample");
    }
    Sample sub = s.restricted_to(c.elements);
    if (sub.size() != c.elements.size()) return false;
    auto poly = interpolate(sub);
    Rational top = poly.coeff(sub.size() - 1);
    if (is_integral(top) || top != c.leading_coeff) return false;
    if (c.denominator < 2 || c.denominator != lip::denominator(top)) return false;
    const Integer r = floor_mod(c.elements.front(), c.denominator);
    for (const auto& x : c.elements) {
        if (floor_mod(x, c.denominator) != r) return false;
    }
    for (std::size_t i = 0; i < sub.size(); ++i) {
        std::vector<Point> rest = sub.points();
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (!detail::has_integer_interpolant(rest)) return false;
    }
    return true;
}

// f_{X+a} - f_{X+b} == c (a - b) prod_{z in X} (x - z), with c the
// coefficient of x^{|X|+1} in f_{X+a+b}. Holds for every function; the check
// recomputes all three interpolants from s.
inline bool exchange_identity_check(const Sample& s, const std::vector<Integer>& x_set, const Integer& a,
                                    const Integer& b) {
    if (a == b) throw PreconditionError("exchange identity: a and b must differ");
    for (const auto& z : x_set) {
        if (z == a || z == b) throw PreconditionError("exchange identity: a and b must lie outside X");
    }
    auto with = [&](std::initializer_list<Integer> extra) {
        std::vector<Integer> xs = x_set;
        xs.insert(xs.end(), extra.begin(), extra.end());
        return s.restricted_to(xs);
    };
    Sample xa = with({a}), xb = with({b}), xab = with({a, b});
    if (xab.size() != x_set.size() + 2) throw PreconditionError("exchange identity: X contains duplicates");
    auto fa = interpolate(xa);
    auto fb = interpolate(xb);
    Rational c = interpolate(xab).coeff(x_set.size() + 1);
    auto rhs = Rational(c * Rational(a - b)) * product_of_linear_factors<Rational>(x_set);
    return fa - fb == rhs;
}

inline std::string to_string(const Circuit& c) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
        if (i) out += ",";
        out += c.elements[i].str();
    }
    return out + "} (c = " + to_string(c.leading_coeff) + ", d = " + c.denominator.str() + ")";
}

inline std::string to_string(const LipVerdict& v) {
    if (auto* ok = std::get_if<Consistent>(&v)) return "Consistent: witness " + to_string(ok->witness);
    return "Inconsistent: circuit " + to_string(std::get<Inconsistent>(v).circuit);
}

}  // namespace lip
