#pragma once

// Evaluable function descriptions: integer polynomials, Newton series,
// explicit samples, and the named non-polynomial LIP families (the
// alternating factorial series, the chain products, the tau-growth series)
// plus the two classic integer-valued non-LIP functions. Also the growth
// bounds these families are measured against.

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lip/newton_series.hpp"
#include "lip/polynomial.hpp"
#include "lip/sample.hpp"

namespace lip {

// sum_{i>=0} (-1)^i prod_{|j|<=i} (x - j)
struct AlternatingFactorialSeries {
    friend bool operator==(const AlternatingFactorialSeries&, const AlternatingFactorialSeries&) = default;
};

// f_m(x) = prod_{k>=m} (1 + prod_{i=1..k} (x - sigma(i))). Without an explicit
// enumeration, sigma is the standard bijection N -> Z.
struct ChainProduct {
    Integer m = 1;
    std::optional<Enumeration> sigma;

    friend bool operator==(const ChainProduct&, const ChainProduct&) = default;
};

// f(x) = sum_{i>=1} prod_{|j|<=c_i} (x - j), c strictly increasing.
struct TauConstruction {
    std::vector<Integer> c;

    friend bool operator==(const TauConstruction&, const TauConstruction&) = default;
};

// x(x+1)/2
struct Triangular {
    friend bool operator==(const Triangular&, const Triangular&) = default;
};

// x^2/2, integer-valued on even x only.
struct HalfSquare {
    friend bool operator==(const HalfSquare&, const HalfSquare&) = default;
};

using FunctionSpec = std::variant<IntPolynomial, NewtonSeries, Sample, AlternatingFactorialSeries, ChainProduct,
                                  TauConstruction, Triangular, HalfSquare>;

struct EvalOptions {
    // Hard cap on series terms / product factors per evaluation.
    std::size_t cap_terms = 10000;
};

namespace detail {

// prod_{|j|<=r} (x - j)
inline Integer symmetric_product(const Integer& x, const Integer& r) {
    Integer acc = 1;
    for (Integer j = -r; j <= r; ++j) {
        acc *= x - j;
        if (acc == 0) break;
    }
    return acc;
}

inline Integer eval_alternating_series(const Integer& x, const EvalOptions& opt) {
    // Term i vanishes once i >= |x|.
    Integer terms = abs(x);
    if (terms > opt.cap_terms) {
        throw LimitExceeded("alternating series at x = " + x.str() + " needs more than " +
                            std::to_string(opt.cap_terms) + " terms");
    }
    Integer sum = 0;
    for (Integer i = 0; i < terms; ++i) {
        Integer term = symmetric_product(x, i);
        sum += (i % 2 == 0) ? term : Integer(-term);
    }
    return sum;
}

inline Integer eval_chain_product(const ChainProduct& spec, const Integer& x, const EvalOptions& opt) {
    if (spec.m < 1) throw DomainError("chain product index m must be >= 1");
    // Position j (1-based) of x in sigma: every factor with k >= j is 1.
    Integer j;
    if (spec.sigma) {
        auto pos = spec.sigma->position(x);
        if (!pos) throw DomainError("chain product: x = " + x.str() + " is outside the given enumeration prefix");
        j = *pos + 1;
    } else {
        j = Enumeration::standard_integer_index(x);
    }
    if (j - spec.m > opt.cap_terms) {
        throw LimitExceeded("chain product at x = " + x.str() + " needs more than " +
                            std::to_string(opt.cap_terms) + " factors");
    }
    auto sigma_at = [&](const Integer& i) {
        return spec.sigma ? (*spec.sigma)[i.convert_to<std::size_t>() - 1]
                          : Enumeration::standard_integer_at(i.convert_to<std::size_t>());
    };
    Integer result = 1;
    Integer inner = 1;  // prod_{i=1..k} (x - sigma(i)), built incrementally
    for (Integer k = 1; k < j; ++k) {
        inner *= x - sigma_at(k);
        if (k >= spec.m) result *= 1 + inner;
    }
    return result;
}

inline Integer eval_tau_construction(const TauConstruction& spec, const Integer& x, const EvalOptions& opt) {
    if (spec.c.empty()) throw DomainError("tau construction needs a nonempty c sequence");
    for (std::size_t i = 0; i < spec.c.size(); ++i) {
        if (spec.c[i] < 1 || (i > 0 && spec.c[i] <= spec.c[i - 1])) {
            throw DomainError("tau construction: c must be a strictly increasing sequence of naturals");
        }
    }
    // Terms with c_i >= |x| vanish; beyond the given prefix the series is
    // only determined when the last c already covers |x|.
    if (abs(x) > spec.c.back()) {
        throw DomainError("tau construction: |x| = " + abs(x).str() + " exceeds the last c = " +
                          spec.c.back().str() + "; the value depends on unspecified terms");
    }
    if (spec.c.size() > opt.cap_terms) throw LimitExceeded("tau construction: too many terms");
    Integer sum = 0;
    for (const auto& ci : spec.c) {
        if (ci >= abs(x)) break;
        sum += symmetric_product(x, ci);
    }
    return sum;
}

}  // namespace detail

inline Integer evaluate(const FunctionSpec& spec, const Integer& x, const EvalOptions& opt = {}) {
    struct Visitor {
        const Integer& x;
        const EvalOptions& opt;
        Integer operator()(const IntPolynomial& p) const { return p(x); }
        Integer operator()(const NewtonSeries& ns) const { return newton_eval(ns, x); }
        Integer operator()(const Sample& s) const { return s.at(x); }
        Integer operator()(const AlternatingFactorialSeries&) const { return detail::eval_alternating_series(x, opt); }
        Integer operator()(const ChainProduct& c) const { return detail::eval_chain_product(c, x, opt); }
        Integer operator()(const TauConstruction& t) const { return detail::eval_tau_construction(t, x, opt); }
        Integer operator()(const Triangular&) const { return x * (x + 1) / 2; }
        Integer operator()(const HalfSquare&) const {
            if (x % 2 != 0) throw DomainError("x^2/2 is not an integer at odd x = " + x.str());
            return x * x / 2;
        }
    };
    return std::visit(Visitor{x, opt}, spec);
}

inline std::string catalog_name(const FunctionSpec& spec) {
    struct Visitor {
        std::string operator()(const IntPolynomial&) const { return "poly"; }
        std::string operator()(const NewtonSeries&) const { return "newton"; }
        std::string operator()(const Sample&) const { return "sample"; }
        std::string operator()(const AlternatingFactorialSeries&) const { return "example1"; }
        std::string operator()(const ChainProduct&) const { return "chain"; }
        std::string operator()(const TauConstruction&) const { return "tau"; }
        std::string operator()(const Triangular&) const { return "triangular"; }
        std::string operator()(const HalfSquare&) const { return "halfsquare"; }
    };
    return std::visit(Visitor{}, spec);
}

// Samples spec over the given x values, which must all be in its domain.
inline Sample sample_of(const FunctionSpec& spec, const std::vector<Integer>& xs, const EvalOptions& opt = {}) {
    std::vector<Point> pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) pts.push_back({x, evaluate(spec, x, opt)});
    return Sample(std::move(pts));
}

using TauFunction = std::function<Integer(const Integer&)>;

// c_1 = 1 and each c_{k+1} the least integer > c_k with
// tau(c_{k+1} - 1) > 4 c_k + 4. At most search_bound candidates per step.
inline std::vector<Integer> tau_sequence(const TauFunction& tau, std::size_t count,
                                         const Integer& search_bound = Integer(1000000)) {
    std::vector<Integer> c;
    if (count == 0) return c;
    c.emplace_back(1);
    while (c.size() < count) {
        const Integer& prev = c.back();
        Integer target = 4 * prev + 4;
        bool found = false;
        for (Integer cand = prev + 1; cand <= prev + search_bound; ++cand) {
            if (tau(cand - 1) > target) {
                c.push_back(cand);
                found = true;
                break;
            }
        }
        if (!found) {
            throw LimitExceeded("tau_sequence: no c_" + std::to_string(c.size() + 1) + " within " +
                                search_bound.str() + " of c_" + std::to_string(c.size()) + " = " + prev.str());
        }
    }
    return c;
}

struct GrowthFloor {
    bool holds;
    Integer x;         // argmax of |p| on {0, ..., d}, first on ties
    Integer value;     // p(x)
    Rational floor;    // d! / 2^d
};

// Some x in {0, ..., d} has |p(x)| >= d!/2^d for every nonzero p in Z[x] of
// degree d; reports the maximizing x.
inline GrowthFloor growth_floor_check(const IntPolynomial& p) {
    if (p.is_zero()) throw DomainError("growth floor is undefined for the zero polynomial");
    unsigned d = static_cast<unsigned>(p.degree().value());
    Rational floor(factorial(d), pow(Integer(2), d));
    Integer best_x = 0, best_value = p(Integer(0));
    for (unsigned x = 1; x <= d; ++x) {
        Integer v = p(Integer(x));
        if (abs(v) > abs(best_value)) {
            best_x = x;
            best_value = v;
        }
    }
    return {Rational(abs(best_value)) >= floor, best_x, best_value, floor};
}

// (2|x|-1)! / 2^(2|x|-1) for x != 0.
inline Rational factorial_threshold(const Integer& x) {
    if (x == 0) throw DomainError("factorial threshold is undefined at x = 0");
    unsigned n = 2 * to_unsigned(abs(x), "|x|") - 1;
    return Rational(factorial(n), pow(Integer(2), n));
}

// (2|x|-1)! for x != 0; the envelope of the alternating factorial series.
inline Integer alternating_series_bound(const Integer& x) {
    if (x == 0) throw DomainError("factorial bound is undefined at x = 0");
    return factorial(2 * to_unsigned(abs(x), "|x|") - 1);
}

}  // namespace lip
