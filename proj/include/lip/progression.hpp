#pragma once

// Arithmetic progressions a + dZ_{>=0} and a + dZ, and their intersections.

#include <optional>
#include <string>

#include "lip/integer.hpp"

namespace lip {

enum class ProgressionDomain {
    nonneg_indexed,  // a, a + d, a + 2d, ...
    two_sided,       // a + dZ
};

class Progression {
public:
    // a + dZ_{>=0}, d >= 1.
    static Progression ascending(Integer first, Integer step) {
        check_step(step);
        return Progression(std::move(first), std::move(step), ProgressionDomain::nonneg_indexed);
    }
    // a + dZ, d >= 1; stored with 0 <= a < d.
    static Progression two_sided(const Integer& first, Integer step) {
        check_step(step);
        Integer a = floor_mod(first, step);
        return Progression(std::move(a), std::move(step), ProgressionDomain::two_sided);
    }

    const Integer& first() const { return first_; }
    const Integer& step() const { return step_; }
    ProgressionDomain domain() const { return domain_; }
    bool is_two_sided() const { return domain_ == ProgressionDomain::two_sided; }

    bool contains(const Integer& x) const {
        if (!is_two_sided() && x < first_) return false;
        return floor_mod(x - first_, step_) == 0;
    }

    // Least element >= bound.
    Integer first_at_least(const Integer& bound) const {
        Integer lo = is_two_sided() ? bound : (bound > first_ ? bound : first_);
        return first_ + ceil_div(lo - first_, step_) * step_;
    }

    friend bool operator==(const Progression&, const Progression&) = default;

private:
    Progression(Integer a, Integer d, ProgressionDomain dom)
        : first_(std::move(a)), step_(std::move(d)), domain_(dom) {}

    static void check_step(const Integer& d) {
        if (d < 1) throw DomainError("progression step must be >= 1, got " + d.str());
    }

    Integer first_;
    Integer step_;
    ProgressionDomain domain_;
};

// Same syntax the set-expression parser accepts.
inline std::string to_string(const Progression& p) {
    return std::string(p.is_two_sided() ? "apz(" : "ap(") + p.first().str() + "," + p.step().str() + ")";
}

// Nonempty iff gcd(d1, d2) | a1 - a2; then a progression of step
// lcm(d1, d2), ascending from the least common element when either input is
// ascending.
inline std::optional<Progression> ap_intersect(const Progression& p1, const Progression& p2) {
    auto cls = crt(p1.first(), p1.step(), p2.first(), p2.step());
    if (!cls) return std::nullopt;
    if (p1.is_two_sided() && p2.is_two_sided()) return Progression::two_sided(cls->residue, cls->modulus);
    Integer bound;
    if (!p1.is_two_sided() && !p2.is_two_sided()) {
        bound = p1.first() > p2.first() ? p1.first() : p2.first();
    } else {
        bound = p1.is_two_sided() ? p2.first() : p1.first();
    }
    auto whole = Progression::two_sided(cls->residue, cls->modulus);
    return Progression::ascending(whole.first_at_least(bound), cls->modulus);
}

// a + (b - a)Z: the points that can never be added when continuing a
// function whose branches at a and b disagree.
inline Progression obstruction_progression(const Integer& a, const Integer& b) {
    if (a == b) throw DomainError("obstruction progression needs a != b");
    return Progression::two_sided(a, abs(b - a));
}

// An infinite progression inside p1 and p2 and a + (b - a)Z, for a in p1,
// b in p2, a != b and p1, p2 intersecting.
inline Progression generated_common_progression(const Progression& p1, const Integer& a, const Progression& p2,
                                                const Integer& b) {
    if (!p1.contains(a)) throw PreconditionError(a.str() + " is not in " + to_string(p1));
    if (!p2.contains(b)) throw PreconditionError(b.str() + " is not in " + to_string(p2));
    if (a == b) throw PreconditionError("generated progression needs a != b");
    auto common = ap_intersect(p1, p2);
    if (!common) throw PreconditionError(to_string(p1) + " and " + to_string(p2) + " do not intersect");
    auto result = ap_intersect(*common, obstruction_progression(a, b));
    if (!result) throw std::logic_error("intersecting progressions missed the progression generated by a and b");
    return *result;
}

}  // namespace lip
