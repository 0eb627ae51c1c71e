#pragma once

// Newton divided-difference interpolation with exact rationals, and the
// discrete derivative on sampled functions.

#include <vector>

#include "lip/polynomial.hpp"
#include "lip/sample.hpp"

namespace lip {

// Newton coefficients f[x0], f[x0,x1], ..., f[x0..x(n-1)] in the sample's
// x order.
inline std::vector<Rational> divided_differences(const Sample& s) {
    const auto& pts = s.points();
    std::vector<Rational> table;
    table.reserve(pts.size());
    for (const auto& p : pts) table.emplace_back(p.y);
    for (std::size_t level = 1; level < pts.size(); ++level) {
        for (std::size_t i = pts.size() - 1; i >= level; --i) {
            table[i] = (table[i] - table[i - 1]) / Rational(pts[i].x - pts[i - level].x);
        }
    }
    return table;
}

// The unique p in Q[x] with deg p < |s| and p(x) = y on the sample.
inline RatPolynomial interpolate(const Sample& s) {
    const auto& pts = s.points();
    auto c = divided_differences(s);
    RatPolynomial acc = RatPolynomial::constant(c.back());
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        acc = acc * RatPolynomial::linear_factor(Rational(pts[k].x)) + RatPolynomial::constant(c[k]);
    }
    return acc;
}

// (x, f(x) - f(x-1)) for every sampled x whose predecessor is also sampled.
inline Sample discrete_derivative_sample(const Sample& s) {
    std::vector<Point> out;
    const auto& pts = s.points();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].x - pts[i - 1].x == 1) out.push_back({pts[i].x, pts[i].y - pts[i - 1].y});
    }
    if (out.empty()) throw DomainError("discrete derivative: sample has no pair x-1, x");
    return Sample(std::move(out));
}

// (delta^d f)(r + d) for a sample on the consecutive block r, ..., r + d.
// Equals d! times the leading coefficient of the degree-<=d interpolant.
inline Integer iterated_delta_top(const Sample& s) {
    const auto& pts = s.points();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].x - pts[i - 1].x != 1) {
            throw DomainError("iterated delta needs consecutive x values; gap after " + pts[i - 1].x.str());
        }
    }
    std::vector<Integer> v;
    v.reserve(pts.size());
    for (const auto& p : pts) v.push_back(p.y);
    for (std::size_t n = v.size(); n > 1; --n) {
        for (std::size_t i = 0; i + 1 < n; ++i) v[i] = v[i + 1] - v[i];
    }
    return v.front();
}

}  // namespace lip
