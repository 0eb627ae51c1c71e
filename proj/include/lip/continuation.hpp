#pragma once

// Continuing a function on X from two integer branches at a and b whose
// joint interpolant is not integer. Each new point x admits exactly the
// values y that keep both branches X+{a,x} and X+{b,x} integer; that set is a
// single congruence class, found by CRT, or empty on the obstruction
// progression a + (b - a)Z.

#include <string>
#include <vector>

#include "lip/lip_check.hpp"
#include "lip/progression.hpp"

namespace lip {

struct BranchSetup {
    Sample base;  // f on X = {x_1, ..., x_n}
    Integer a;
    Integer b;
    Integer fa;
    Integer fb;
};

struct BranchCoefficients {
    Integer alpha;  // f_{X+a} = f_X + alpha * prod (x - x_i)
    Integer beta;   // f_{X+b} = f_X + beta * prod (x - x_i)
};

// Admissible values y0 + kM, k in Z, with 0 <= y0 < M.
struct ExtensionClass {
    Integer rep;
    Integer mod;

    bool contains(const Integer& y) const { return floor_mod(y - rep, mod) == 0; }

    // Smallest |y| in the class; the nonnegative one on ties.
    Integer min_abs_representative() const {
        Integer below = rep - mod;
        return rep <= -below ? rep : below;
    }

    friend bool operator==(const ExtensionClass&, const ExtensionClass&) = default;
};

// No value at `point` keeps both branches integer.
class ObstructedPoint : public Error {
public:
    ObstructedPoint(Integer point, Progression obstruction)
        : Error("x = " + point.str() + " admits no value: gcd(x - a, a - b) does not divide the branch gap" +
                (obstruction.contains(point) ? " (x lies on the obstruction progression " + to_string(obstruction) + ")"
                                             : std::string())),
          point_(std::move(point)),
          obstruction_(std::move(obstruction)) {}

    const Integer& point() const { return point_; }
    const Progression& obstruction() const { return obstruction_; }
    bool on_obstruction_progression() const { return obstruction_.contains(point_); }

private:
    Integer point_;
    Progression obstruction_;
};

namespace detail {

inline Sample with_point(const Sample& s, const Integer& x, const Integer& y) {
    std::vector<Point> pts = s.points();
    pts.push_back({x, y});
    return Sample(std::move(pts));
}

inline Integer node_product(const Sample& base, const Integer& x) {
    Integer acc = 1;
    for (const auto& p : base) acc *= x - p.x;
    return acc;
}

}  // namespace detail

// Throws PreconditionError naming the first violated invariant.
inline void validate(const BranchSetup& s) {
    if (s.a == s.b || s.base.contains(s.a) || s.base.contains(s.b)) {
        throw PreconditionError("branch setup: x_i, a, b must be pairwise distinct");
    }
    Sample with_a = detail::with_point(s.base, s.a, s.fa);
    Sample with_b = detail::with_point(s.base, s.b, s.fb);
    if (!is_integer(interpolate(with_a))) throw PreconditionError("branch setup: interpolant on X+{a} is not integer");
    if (!is_integer(interpolate(with_b))) throw PreconditionError("branch setup: interpolant on X+{b} is not integer");
    if (is_integer(interpolate(detail::with_point(with_a, s.b, s.fb)))) {
        throw PreconditionError("branch setup: interpolant on X+{a,b} is integer; nothing to continue around");
    }
}

inline BranchCoefficients branch_coefficients(const BranchSetup& s) {
    validate(s);
    auto fx = as_integer(interpolate(s.base));
    if (!fx) throw std::logic_error("integer branch with non-integer restriction to X");
    auto coefficient = [&](const Integer& at, const Integer& value) {
        Integer num = value - (*fx)(at);
        Integer den = detail::node_product(s.base, at);
        if (num % den != 0) throw std::logic_error("branch coefficient is not an integer");
        return Integer(num / den);
    };
    BranchCoefficients bc{coefficient(s.a, s.fa), coefficient(s.b, s.fb)};
    if (bc.alpha == bc.beta) throw std::logic_error("branch coefficients coincide on a non-integer joint interpolant");
    if (abs(s.a - s.b) < 2) throw std::logic_error("adjacent branch points with a non-integer joint interpolant");
    return bc;
}

// All y making both f_{X+{a,x}} and f_{X+{b,x}} integer:
//   y = f_{X+a}(x) mod (x - a) prod (x - x_i)
//   y = f_{X+b}(x) mod (x - b) prod (x - x_i).
inline ExtensionClass admissible_extension(const BranchSetup& s, const Integer& x_new) {
    validate(s);
    if (x_new == s.a || x_new == s.b || s.base.contains(x_new)) {
        throw PreconditionError("extension point " + x_new.str() + " is already in X+{a,b}");
    }
    auto fa = as_integer(interpolate(detail::with_point(s.base, s.a, s.fa)));
    auto fb = as_integer(interpolate(detail::with_point(s.base, s.b, s.fb)));
    Integer nodes = detail::node_product(s.base, x_new);
    auto cls = crt((*fa)(x_new), (x_new - s.a) * nodes, (*fb)(x_new), (x_new - s.b) * nodes);
    if (!cls) throw ObstructedPoint(x_new, obstruction_progression(s.a, s.b));
    return ExtensionClass{cls->residue, cls->modulus};
}

// The window (2Z + {-1, 1}) cap [-n, n] of a function that is LIP on the
// set minus -1 and minus 1 but not on the whole set. Seeded with
// f(-1), f(0), f(1) = 0, 0, 1; even points are added in the order
// 2, -2, 4, -4, ..., each taking the least-|y| admissible value.
inline Sample build_example3(const Integer& n) {
    if (n < 2) throw DomainError("window size must be >= 2");
    const Integer a = -1, b = 1;
    Sample base({{0, 0}});
    for (Integer k = 2; k <= n; k += 2) {
        for (const Integer& x : {k, Integer(-k)}) {
            BranchSetup setup{base, a, b, 0, 1};
            Integer y = admissible_extension(setup, x).min_abs_representative();
            base = detail::with_point(base, x, y);
        }
    }
    Sample full = detail::with_point(detail::with_point(base, a, 0), b, 1);

    if (!is_consistent(lip_check(full.without(a))) || !is_consistent(lip_check(full.without(b)))) {
        throw std::logic_error("continuation produced an inconsistent one-point-deleted restriction");
    }
    auto verdict = lip_check(full);
    auto* bad = std::get_if<Inconsistent>(&verdict);
    if (!bad) throw std::logic_error("continuation produced a consistent full sample");
    const auto& el = bad->circuit.elements;
    if (std::find(el.begin(), el.end(), a) == el.end() || std::find(el.begin(), el.end(), b) == el.end()) {
        throw std::logic_error("circuit of the continued function misses -1 or 1");
    }
    return full;
}

inline std::string to_string(const ExtensionClass& c) { return c.rep.str() + " mod " + c.mod.str(); }

}  // namespace lip
