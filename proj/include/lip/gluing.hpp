#pragma once

// Gluing LIP functions along a cover. A family of pieces (carrier set,
// function) glues to a LIP function on the union when every piece is LIP and
// every pairwise intersection meets each progression a1 + (a2 - a1)Z,
// a1 in U1, a2 in U2, infinitely often. The checker decides that hypothesis
// exactly on the normal forms, checks the pieces agree on a window, and runs
// lip_check on the window samples.

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lip/catalog.hpp"
#include "lip/lip_check.hpp"
#include "lip/normal_set.hpp"

namespace lip {

struct Window {
    Integer lo;
    Integer hi;

    friend bool operator==(const Window&, const Window&) = default;
};

inline Window make_window(const Integer& lo, const Integer& hi) {
    if (lo > hi) throw DomainError("window " + lo.str() + ".." + hi.str() + " is empty");
    return {lo, hi};
}

struct Piece {
    SetExprPtr carrier;
    FunctionSpec fn;
};

inline bool operator==(const Piece& a, const Piece& b) { return *a.carrier == *b.carrier && a.fn == b.fn; }

struct GluingFamily {
    std::vector<Piece> pieces;
    Window window;

    friend bool operator==(const GluingFamily&, const GluingFamily&) = default;
};

struct PreconditionOk {
    friend bool operator==(const PreconditionOk&, const PreconditionOk&) = default;
};
struct Violation {
    std::size_t piece1;
    std::size_t piece2;
    Integer a1;
    Integer a2;
    MeetVerdict verdict;

    friend bool operator==(const Violation&, const Violation&) = default;
};
using PreconditionResult = std::variant<PreconditionOk, Violation>;

struct AgreementOk {
    friend bool operator==(const AgreementOk&, const AgreementOk&) = default;
};
struct Mismatch {
    Integer x;
    std::size_t piece1;
    std::size_t piece2;
    Integer y1;
    Integer y2;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};
using AgreementResult = std::variant<AgreementOk, Mismatch>;

struct GluingReport {
    std::optional<PreconditionResult> precondition;
    std::optional<AgreementResult> agreement;
    std::vector<LipVerdict> piece_verdicts;  // one per piece, window sample
    std::optional<LipVerdict> verdict;       // union window sample

    // OK precondition, agreement and pieces, yet an inconsistent union.
    bool implication_violated() const {
        if (!precondition || !std::holds_alternative<PreconditionOk>(*precondition)) return false;
        if (!agreement || !std::holds_alternative<AgreementOk>(*agreement)) return false;
        for (const auto& v : piece_verdicts) {
            if (!is_consistent(v)) return false;
        }
        return verdict && !is_consistent(*verdict);
    }

    friend bool operator==(const GluingReport&, const GluingReport&) = default;
};

struct GlueOptions {
    NormalizeOptions normalize;
    EvalOptions eval;
    Integer primes_bound = 100000;
    bool fail_fast = false;
};

namespace detail {

// A realizable choice of a point of a normal set: an infinite residue class
// mod L, or one explicitly added point.
struct Source {
    bool finite;
    Integer value;  // the point when finite
    std::int64_t residue;
};

inline std::vector<Source> sources(const NormalSet& n, std::int64_t L) {
    std::vector<Source> out;
    auto pos = lift(n.positive_mask(), L), neg = lift(n.nonpositive_mask(), L);
    for (std::int64_t r = 0; r < L; ++r) {
        if (pos[static_cast<std::size_t>(r)] || neg[static_cast<std::size_t>(r)]) out.push_back({false, 0, r});
    }
    for (const auto& x : n.added()) out.push_back({true, x, floor_mod(x, Integer(L)).convert_to<std::int64_t>()});
    return out;
}

// Element of n congruent to r mod L, nearest the window, different from
// `avoid`. Exists whenever the class is infinite in n.
inline Integer class_member(const NormalSet& n, std::int64_t L, std::int64_t r, const Window& w,
                            const std::optional<Integer>& avoid) {
    Integer start = w.lo + floor_mod(Integer(r) - w.lo, Integer(L));
    auto ok = [&](const Integer& x) { return n.contains(x) && (!avoid || x != *avoid); };
    for (Integer x = start; x <= w.hi; x += L) {
        if (ok(x)) return x;
    }
    // Outside the window: walk outward on both sides.
    Integer up = start, down = start - L;
    while (up <= w.hi) up += L;
    Integer limit = n.correction_radius() + abs(w.lo) + abs(w.hi) + 4 * Integer(L) + 4;
    for (Integer step = 0; step <= limit; step += L, up += L, down -= L) {
        if (ok(up)) return up;
        if (ok(down)) return down;
    }
    throw std::logic_error("no member found in an infinite residue class");
}

inline PreconditionResult check_pair_residues(std::size_t i, std::size_t j, const NormalSet& u1, const NormalSet& u2,
                                              const NormalSet& w, const Window& win, const GlueOptions& opt) {
    const std::int64_t L = checked_lcm(checked_lcm(u1.modulus(), u2.modulus(), opt.normalize), w.modulus(),
                                       opt.normalize);
    auto s1 = sources(u1, L), s2 = sources(u2, L);
    auto wl = lift(w.positive_mask(), L), wn = lift(w.nonpositive_mask(), L);

    // reach[g][x]: some infinite class of w is congruent to x mod g.
    std::map<std::int64_t, std::vector<char>> reach;
    auto reachable = [&](std::int64_t g, std::int64_t x) {
        auto it = reach.find(g);
        if (it == reach.end()) {
            std::vector<char> m(static_cast<std::size_t>(g));
            for (std::int64_t r = 0; r < L; ++r) {
                if (wl[static_cast<std::size_t>(r)] || wn[static_cast<std::size_t>(r)]) m[static_cast<std::size_t>(r % g)] = 1;
            }
            it = reach.emplace(g, std::move(m)).first;
        }
        return it->second[static_cast<std::size_t>(x % g)] != 0;
    };

    for (const auto& p : s1) {
        for (const auto& q : s2) {
            if (p.finite && q.finite && p.value == q.value) continue;
            std::int64_t m = ((q.residue - p.residue) % L + L) % L;
            std::int64_t g = std::gcd(L, m);  // gcd(L, 0) = L
            if (reachable(g, p.residue)) continue;

            Integer a1 = p.finite ? p.value : class_member(u1, L, p.residue, win, std::nullopt);
            Integer a2 = q.finite ? q.value : class_member(u2, L, q.residue, win, a1);
            if (a1 == a2) a1 = class_member(u1, L, p.residue, win, a2);
            auto verdict = meets_infinitely(w, Progression::two_sided(a1, abs(a2 - a1)), opt.primes_bound);
            if (std::holds_alternative<InfinitelyMany>(verdict)) {
                throw std::logic_error("residue-level gluing check disagrees with meets_infinitely");
            }
            return Violation{i, j, a1, a2, verdict};
        }
    }
    return PreconditionOk{};
}

// With the primes filter the residue argument no longer applies; every
// concrete window pair is tested, and Unknown counts as a violation.
inline PreconditionResult check_pair_concrete(std::size_t i, std::size_t j, const NormalSet& u1, const NormalSet& u2,
                                              const NormalSet& w, const Window& win, const GlueOptions& opt) {
    auto xs1 = u1.members_in(win.lo, win.hi), xs2 = u2.members_in(win.lo, win.hi);
    std::map<std::pair<Integer, Integer>, bool> seen;
    for (const auto& a1 : xs1) {
        for (const auto& a2 : xs2) {
            if (a1 == a2) continue;
            Integer d = abs(a2 - a1);
            auto key = std::make_pair(floor_mod(a1, d), d);
            if (seen.count(key)) continue;
            seen[key] = true;
            auto verdict = meets_infinitely(w, Progression::two_sided(a1, d), opt.primes_bound);
            if (!std::holds_alternative<InfinitelyMany>(verdict)) return Violation{i, j, a1, a2, verdict};
        }
    }
    return PreconditionOk{};
}

}  // namespace detail

// Every ordered pair of pieces, a piece with itself included.
inline PreconditionResult precondition_check(const GluingFamily& fam, const GlueOptions& opt = {}) {
    if (fam.pieces.empty()) throw DomainError("gluing family needs at least one piece");
    make_window(fam.window.lo, fam.window.hi);
    std::vector<NormalSet> norms;
    for (const auto& p : fam.pieces) norms.push_back(normalize(*p.carrier, opt.normalize));
    for (std::size_t i = 0; i < norms.size(); ++i) {
        for (std::size_t j = 0; j < norms.size(); ++j) {
            NormalSet w = normalize(*set_expr::intersect(fam.pieces[i].carrier, fam.pieces[j].carrier), opt.normalize);
            bool primes = norms[i].primes_filter() || norms[j].primes_filter() || w.primes_filter();
            auto r = primes ? detail::check_pair_concrete(i, j, norms[i], norms[j], w, fam.window, opt)
                            : detail::check_pair_residues(i, j, norms[i], norms[j], w, fam.window, opt);
            if (std::holds_alternative<Violation>(r)) return r;
        }
    }
    return PreconditionOk{};
}

namespace detail {

inline LipVerdict verdict_of(const std::vector<Point>& pts) {
    if (pts.empty()) return Consistent{IntPolynomial{}};
    return lip_check(Sample(pts));
}

}  // namespace detail

inline GluingReport glue_check(const GluingFamily& fam, const GlueOptions& opt = {}) {
    GluingReport report;
    report.precondition = precondition_check(fam, opt);
    if (opt.fail_fast && std::holds_alternative<Violation>(*report.precondition)) return report;

    // Evaluate every piece on its window points and merge.
    std::map<Integer, std::pair<Integer, std::size_t>> merged;  // x -> (y, first piece)
    std::optional<Mismatch> mismatch;
    std::vector<std::vector<Point>> piece_points(fam.pieces.size());
    for (std::size_t i = 0; i < fam.pieces.size(); ++i) {
        NormalSet n = normalize(*fam.pieces[i].carrier, opt.normalize);
        for (const auto& x : n.members_in(fam.window.lo, fam.window.hi)) {
            Integer y = evaluate(fam.pieces[i].fn, x, opt.eval);
            piece_points[i].push_back({x, y});
            auto [it, fresh] = merged.emplace(x, std::make_pair(y, i));
            if (!fresh && it->second.first != y && !mismatch) {
                mismatch = Mismatch{x, it->second.second, i, it->second.first, y};
            }
        }
    }
    if (mismatch) {
        report.agreement = *mismatch;
    } else {
        report.agreement = AgreementOk{};
    }
    if (opt.fail_fast && mismatch) return report;

    for (const auto& pts : piece_points) report.piece_verdicts.push_back(detail::verdict_of(pts));
    // Without agreement there is no function on the union to check.
    if (!mismatch) {
        std::vector<Point> all;
        for (const auto& [x, v] : merged) all.push_back({x, v.first});
        report.verdict = detail::verdict_of(all);
    }
    return report;
}

struct Neighborhood {
    Integer a;
    Integer d;

    friend bool operator==(const Neighborhood&, const Neighborhood&) = default;
};
struct Exhausted {
    friend bool operator==(const Exhausted&, const Exhausted&) = default;
};
using ProbeResult = std::variant<Neighborhood, Exhausted>;

// Searches basic Kirch opens a' + d'Z_{>=0} around `point` inside the
// carrier, smallest d' first, then smallest a', for one on which fn's window
// sample is consistent. Exhausted only means the search bound was reached.
inline ProbeResult locally_lip_probe(const SetExpr& carrier, const FunctionSpec& fn, const Integer& point,
                                     const Window& window, const Integer& search_bound, const GlueOptions& opt = {}) {
    NormalSet n = normalize(carrier, opt.normalize);
    if (point < 1 || !n.contains(point)) {
        throw DomainError("probe point " + point.str() + " is not a natural number in the carrier");
    }
    for (Integer d = 1; d <= search_bound; ++d) {
        if (!is_squarefree(d) || gcd(point, d) != 1) continue;
        // a' ranges over point, point - d, ... down to the least positive one.
        Integer least = floor_mod(point, d);
        if (least == 0) least = d;
        for (Integer a = least; a <= point; a += d) {
            if (!kirch_basic_check(a, d)) continue;
            auto p = Progression::ascending(a, d);
            if (!contains_progression(n, p)) continue;
            std::vector<Point> pts;
            Integer x = p.first_at_least(window.lo);
            for (; x <= window.hi; x += d) pts.push_back({x, evaluate(fn, x, opt.eval)});
            if (is_consistent(detail::verdict_of(pts))) return Neighborhood{a, d};
        }
    }
    return Exhausted{};
}

inline std::string to_string(const PreconditionResult& r) {
    if (std::holds_alternative<PreconditionOk>(r)) return "OK";
    const auto& v = std::get<Violation>(r);
    return "Violation: pieces " + std::to_string(v.piece1) + "," + std::to_string(v.piece2) + " at a1 = " +
           v.a1.str() + ", a2 = " + v.a2.str() + " (" + to_string(v.verdict) + ")";
}

inline std::string to_string(const AgreementResult& r) {
    if (std::holds_alternative<AgreementOk>(r)) return "OK";
    const auto& m = std::get<Mismatch>(r);
    return "Mismatch at x = " + m.x.str() + ": piece " + std::to_string(m.piece1) + " gives " + m.y1.str() +
           ", piece " + std::to_string(m.piece2) + " gives " + m.y2.str();
}

}  // namespace lip
