#pragma once

// Canonical form of a set expression: residue classes modulo a single L,
// possibly different on the positive side (x >= 1) and the nonpositive side
// (x <= 0), an optional primes filter, and finite corrections.
//
//   S = ((side-residues mod L) [cap primes] | added) \ removed
//
// Membership, intersection tests against progressions, density and the
// cofinite / density-one predicates are all exact on this form.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <variant>
#include <vector>

#include "lip/set_expr.hpp"

namespace lip {

enum class Ground {
    integers,  // both sides carry the same residues
    naturals,  // nothing on the nonpositive side
    mixed,     // the two sides differ
};

inline std::string to_string(Ground g) {
    switch (g) {
        case Ground::integers: return "Z";
        case Ground::naturals: return "N";
        case Ground::mixed: return "mixed";
    }
    return "?";
}

struct NormalizeOptions {
    std::int64_t max_modulus = 1000000;
};

// Reads LIP_MAX_MODULUS when set.
inline NormalizeOptions normalize_options_from_env(NormalizeOptions base = {}) {
    if (const char* env = std::getenv("LIP_MAX_MODULUS")) {
        Integer v = parse_integer(env);
        if (v < 1) throw DomainError("LIP_MAX_MODULUS must be >= 1");
        base.max_modulus = to_int64(v, "LIP_MAX_MODULUS");
    }
    return base;
}

class NormalSet {
public:
    using Mask = std::vector<char>;

    NormalSet(std::int64_t modulus, Mask positive, Mask nonpositive, std::vector<Integer> added,
              std::vector<Integer> removed, bool primes_filter)
        : modulus_(modulus),
          positive_(std::move(positive)),
          nonpositive_(std::move(nonpositive)),
          added_(std::move(added)),
          removed_(std::move(removed)),
          primes_(primes_filter) {
        std::sort(added_.begin(), added_.end());
        std::sort(removed_.begin(), removed_.end());
    }

    std::int64_t modulus() const { return modulus_; }
    const Mask& positive_mask() const { return positive_; }
    const Mask& nonpositive_mask() const { return nonpositive_; }
    const std::vector<Integer>& added() const { return added_; }
    const std::vector<Integer>& removed() const { return removed_; }
    bool primes_filter() const { return primes_; }

    // Residues of the positive side, ascending.
    std::vector<std::int64_t> residues() const { return listed(positive_); }
    std::vector<std::int64_t> nonpositive_residues() const { return listed(nonpositive_); }

    Ground ground() const {
        if (positive_ == nonpositive_ && !primes_) return Ground::integers;
        if (std::none_of(nonpositive_.begin(), nonpositive_.end(), [](char c) { return c; })) return Ground::naturals;
        return Ground::mixed;
    }

    std::int64_t residue_of(const Integer& x) const { return floor_mod(x, Integer(modulus_)).convert_to<std::int64_t>(); }

    // Membership in the periodic part, before corrections.
    bool in_base(const Integer& x) const {
        const Mask& side = x >= 1 ? positive_ : nonpositive_;
        if (!side[static_cast<std::size_t>(residue_of(x))]) return false;
        return !primes_ || is_prime(x);
    }

    bool contains(const Integer& x) const {
        if (std::binary_search(added_.begin(), added_.end(), x)) return true;
        if (std::binary_search(removed_.begin(), removed_.end(), x)) return false;
        return in_base(x);
    }

    // Largest |x| among the corrections; beyond it the set is periodic.
    Integer correction_radius() const {
        Integer r = 0;
        for (const auto* v : {&added_, &removed_}) {
            for (const auto& x : *v) r = std::max(r, abs(x));
        }
        return r;
    }

    std::vector<Integer> members_in(const Integer& lo, const Integer& hi) const {
        std::vector<Integer> out;
        for (Integer x = lo; x <= hi; ++x) {
            if (contains(x)) out.push_back(x);
        }
        return out;
    }

    friend bool operator==(const NormalSet&, const NormalSet&) = default;

private:
    static std::vector<std::int64_t> listed(const Mask& m) {
        std::vector<std::int64_t> out;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (m[r]) out.push_back(static_cast<std::int64_t>(r));
        }
        return out;
    }

    std::int64_t modulus_;
    Mask positive_;
    Mask nonpositive_;
    std::vector<Integer> added_;
    std::vector<Integer> removed_;
    bool primes_;
};

namespace detail {

inline NormalSet::Mask lift(const NormalSet::Mask& m, std::int64_t to) {
    NormalSet::Mask out(static_cast<std::size_t>(to));
    const auto from = static_cast<std::int64_t>(m.size());
    for (std::int64_t r = 0; r < to; ++r) out[static_cast<std::size_t>(r)] = m[static_cast<std::size_t>(r % from)];
    return out;
}

inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b, const NormalizeOptions& opt) {
    Integer l = lip::lcm(Integer(a), Integer(b));
    if (l > opt.max_modulus) {
        throw LimitExceeded("normal form modulus " + l.str() + " exceeds the cap " + std::to_string(opt.max_modulus));
    }
    return l.convert_to<std::int64_t>();
}

inline std::int64_t checked_modulus(const Integer& d, const NormalizeOptions& opt) {
    if (d > opt.max_modulus) {
        throw LimitExceeded("progression step " + d.str() + " exceeds the modulus cap " +
                            std::to_string(opt.max_modulus));
    }
    return d.convert_to<std::int64_t>();
}

inline NormalSet atom_progression(const Progression& p, const NormalizeOptions& opt) {
    const std::int64_t d = checked_modulus(p.step(), opt);
    NormalSet::Mask cls(static_cast<std::size_t>(d));
    cls[static_cast<std::size_t>(floor_mod(p.first(), p.step()).convert_to<std::int64_t>())] = 1;
    if (p.is_two_sided()) return NormalSet(d, cls, cls, {}, {}, false);

    // a + dZ_{>=0}: the class on the positive side, minus the terms below a
    // (a >= 1) or plus the terms in [a, 0] (a <= 0).
    std::vector<Integer> added, removed;
    const Integer& a = p.first();
    Integer count = a >= 1 ? Integer((a - 1) / p.step()) : Integer(-a / p.step() + 1);
    if (count > opt.max_modulus) {
        throw LimitExceeded("progression " + to_string(p) + " needs more than " + std::to_string(opt.max_modulus) +
                            " finite corrections");
    }
    if (a >= 1) {
        for (Integer x = a - p.step(); x >= 1; x -= p.step()) removed.push_back(x);
    } else {
        for (Integer x = a; x <= 0; x += p.step()) added.push_back(x);
    }
    return NormalSet(d, cls, NormalSet::Mask(static_cast<std::size_t>(d)), std::move(added), std::move(removed),
                     false);
}

inline bool periodic_part_empty(const NormalSet& n) {
    auto any = [](const NormalSet::Mask& m) { return std::any_of(m.begin(), m.end(), [](char c) { return c; }); };
    return !any(n.positive_mask()) && !any(n.nonpositive_mask());
}

inline NormalSet combine(SetOp op, const NormalSet& a, const NormalSet& b, const NormalizeOptions& opt) {
    const std::int64_t L = checked_lcm(a.modulus(), b.modulus(), opt);
    auto ap = lift(a.positive_mask(), L), an = lift(a.nonpositive_mask(), L);
    auto bp = lift(b.positive_mask(), L), bn = lift(b.nonpositive_mask(), L);
    NormalSet::Mask pos(static_cast<std::size_t>(L)), neg(static_cast<std::size_t>(L));
    bool primes = false;

    auto apply = [op](char x, char y) -> char {
        switch (op) {
            case SetOp::unite: return x || y;
            case SetOp::intersect: return x && y;
            case SetOp::subtract: return x && !y;
        }
        return 0;
    };

    if (!a.primes_filter() && !b.primes_filter()) {
        for (std::size_t r = 0; r < pos.size(); ++r) {
            pos[r] = apply(ap[r], bp[r]);
            neg[r] = apply(an[r], bn[r]);
        }
    } else {
        // Only forms that stay "primes in residue classes" are representable.
        if (op == SetOp::subtract && b.primes_filter()) {
            throw DomainError("unsupported set expression: the primes may not appear on the right of '\\'");
        }
        if (op == SetOp::unite && !(a.primes_filter() && b.primes_filter())) {
            const NormalSet& plain = a.primes_filter() ? b : a;
            if (!periodic_part_empty(plain)) {
                throw DomainError("unsupported set expression: union of the primes with an infinite non-prime set");
            }
            const auto& kept = a.primes_filter() ? ap : bp;
            pos = kept;
        } else {
            for (std::size_t r = 0; r < pos.size(); ++r) pos[r] = apply(ap[r], bp[r]);
        }
        primes = true;
    }

    NormalSet base(L, pos, neg, {}, {}, primes);
    std::vector<Integer> candidates;
    for (const NormalSet* s : {&a, &b}) {
        candidates.insert(candidates.end(), s->added().begin(), s->added().end());
        candidates.insert(candidates.end(), s->removed().begin(), s->removed().end());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Integer> added, removed;
    for (const auto& x : candidates) {
        bool want = apply(a.contains(x), b.contains(x));
        bool have = base.in_base(x);
        if (want && !have) added.push_back(x);
        if (!want && have) removed.push_back(x);
    }
    return NormalSet(L, std::move(pos), std::move(neg), std::move(added), std::move(removed), primes);
}

}  // namespace detail

inline NormalSet normalize(const SetExpr& e, const NormalizeOptions& opt = {}) {
    struct Visitor {
        const NormalizeOptions& opt;
        NormalSet operator()(const AllIntegers&) const { return NormalSet(1, {1}, {1}, {}, {}, false); }
        NormalSet operator()(const AllNaturals&) const { return NormalSet(1, {1}, {0}, {}, {}, false); }
        NormalSet operator()(const AllPrimes&) const { return NormalSet(1, {1}, {0}, {}, {}, true); }
        NormalSet operator()(const Progression& p) const { return detail::atom_progression(p, opt); }
        NormalSet operator()(const FiniteSet& f) const { return NormalSet(1, {0}, {0}, f.elements, {}, false); }
        NormalSet operator()(const SetBinary& b) const {
            return detail::combine(b.op, normalize(*b.lhs, opt), normalize(*b.rhs, opt), opt);
        }
    };
    return std::visit(Visitor{opt}, e.node);
}

inline bool member(const NormalSet& n, const Integer& x) { return n.contains(x); }

struct InfinitelyMany {
    Progression witness;

    friend bool operator==(const InfinitelyMany&, const InfinitelyMany&) = default;
};
struct FinitelyMany {
    friend bool operator==(const FinitelyMany&, const FinitelyMany&) = default;
};
struct Unknown {
    Integer search_bound;

    friend bool operator==(const Unknown&, const Unknown&) = default;
};

using MeetVerdict = std::variant<InfinitelyMany, FinitelyMany, Unknown>;

inline std::string to_string(const MeetVerdict& v) {
    if (auto* inf = std::get_if<InfinitelyMany>(&v)) return "InfinitelyMany (witness " + to_string(inf->witness) + ")";
    if (std::holds_alternative<FinitelyMany>(v)) return "FinitelyMany";
    return "Unknown (no two primes among the first " + std::get<Unknown>(v).search_bound.str() + " candidates)";
}

// Does n contain infinitely many terms of target?
//
// Without the primes filter this is exact: a residue class r mod L of n
// meets a + dZ in infinitely many points iff gcd(L, d) | r - a. On the
// positive side the witness ascends from past every correction (and past the
// target's start), so it lies inside n and target; a meeting found only on
// the nonpositive side is reported with the two-sided class as witness.
//
// With the primes filter a class c mod M meeting the target is decided by
// finding two primes of n in it (then Dirichlet gives infinitely many), or
// ruled out when gcd(c, M) > 1; otherwise the answer is Unknown.
inline MeetVerdict meets_infinitely(const NormalSet& n, const Progression& target,
                                    const Integer& search_bound = Integer(100000)) {
    const Integer L(n.modulus());
    Integer lower = n.correction_radius() + 1;
    if (!target.is_two_sided() && target.first() > lower) lower = target.first();

    bool unknown = false;
    for (auto r : n.residues()) {
        auto cls = crt(Integer(r), L, target.first(), target.step());
        if (!cls) continue;
        auto whole = Progression::two_sided(cls->residue, cls->modulus);
        if (!n.primes_filter()) return InfinitelyMany{Progression::ascending(whole.first_at_least(lower), cls->modulus)};

        if (gcd(cls->residue, cls->modulus) > 1) continue;
        Integer x = whole.first_at_least(lower > 2 ? lower : Integer(2));
        std::vector<Integer> found;
        for (Integer i = 0; i < search_bound && found.size() < 2; ++i, x += cls->modulus) {
            if (n.contains(x) && target.contains(x)) found.push_back(x);
        }
        if (found.size() == 2) return InfinitelyMany{Progression::ascending(found.front(), cls->modulus)};
        unknown = true;
    }
    if (unknown) return Unknown{search_bound};
    if (target.is_two_sided() && !n.primes_filter()) {
        for (auto r : n.nonpositive_residues()) {
            auto cls = crt(Integer(r), L, target.first(), target.step());
            if (cls) return InfinitelyMany{Progression::two_sided(cls->residue, cls->modulus)};
        }
    }
    return FinitelyMany{};
}

// Natural density: relative to N when nothing lies on the nonpositive side,
// otherwise relative to Z (counting |x| <= X).
inline Rational density(const NormalSet& n) {
    if (n.primes_filter()) throw DomainError("density of prime-filtered sets is not supported");
    const auto pos = static_cast<std::int64_t>(n.residues().size());
    const auto neg = static_cast<std::int64_t>(n.nonpositive_residues().size());
    if (neg == 0) return Rational(pos, n.modulus());
    return Rational(pos + neg, 2 * n.modulus());
}

inline bool is_density_one(const NormalSet& n) { return density(n) == 1; }

// Complement of a finite set, in Z (ground integers) or in N (ground naturals).
inline bool is_cofinite(const NormalSet& n) {
    if (n.primes_filter() || !n.added().empty()) return false;
    const auto L = static_cast<std::size_t>(n.modulus());
    if (n.residues().size() != L) return false;
    const auto neg = n.nonpositive_residues().size();
    return neg == L || neg == 0;
}

// Is the ascending progression p entirely inside n?
inline bool contains_progression(const NormalSet& n, const Progression& p) {
    if (p.is_two_sided()) throw DomainError("containment is decided for ascending progressions only");
    if (n.primes_filter()) return false;
    if (p.first() < 1) {
        // The terms in [first, 0] are finitely many; check them one by one.
        for (Integer x = p.first(); x <= 0; x += p.step()) {
            if (!n.contains(x)) return false;
        }
    }
    Integer L(n.modulus());
    Integer M = lcm(L, p.step());
    for (Integer c = floor_mod(p.first(), p.step()); c < M; c += p.step()) {
        if (!n.positive_mask()[static_cast<std::size_t>(floor_mod(c, L).convert_to<std::int64_t>())]) return false;
    }
    for (const auto& x : n.removed()) {
        if (p.contains(x)) return false;
    }
    return true;
}

// Basic open set a + dZ_{>=0} of the Kirch topology: gcd(a, d) = 1 and d
// squarefree.
inline bool kirch_basic_check(const Integer& a, const Integer& d) {
    if (a < 1 || d < 1) throw DomainError("Kirch basic sets need a >= 1 and d >= 1");
    return gcd(a, d) == 1 && is_squarefree(d);
}

inline std::string to_string(const NormalSet& n) {
    auto list = [](const auto& v) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            if constexpr (std::is_same_v<std::decay_t<decltype(v[i])>, Integer>) {
                out += v[i].str();
            } else {
                out += std::to_string(v[i]);
            }
        }
        return out + "}";
    };
    std::string out = "ground " + to_string(n.ground()) + ", L = " + std::to_string(n.modulus()) + ", residues " +
                      list(n.residues());
    if (n.ground() == Ground::mixed) out += ", nonpositive residues " + list(n.nonpositive_residues());
    if (n.primes_filter()) out += ", primes only";
    if (!n.added().empty()) out += ", added " + list(n.added());
    if (!n.removed().empty()) out += ", removed " + list(n.removed());
    return out;
}

}  // namespace lip
