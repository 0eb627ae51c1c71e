#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace lip;

namespace {

SetExprPtr random_expr(oracle::Rng& rng, int depth) {
    if (depth == 0 || rng.uniform(0, 3) == 0) {
        switch (rng.uniform(0, 4)) {
            case 0: return rng.coin() ? set_expr::integers() : set_expr::naturals();
            case 1: return set_expr::progression(Progression::ascending(rng.integer(-20, 20), rng.integer(1, 12)));
            case 2: return set_expr::progression(Progression::two_sided(rng.integer(-20, 20), rng.integer(1, 12)));
            default: {
                std::vector<Integer> xs;
                for (auto k = rng.uniform(0, 4); k > 0; --k) xs.push_back(rng.integer(-30, 30));
                return set_expr::finite(xs);
            }
        }
    }
    auto op = static_cast<SetOp>(rng.uniform(0, 2));
    return set_expr::binary(op, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
}

NormalSet norm(const std::string& s) { return normalize(*parse_set(s)); }

}  // namespace

TEST(SetParser, DocumentedExamples) {
    auto e = parse_set("ap(1,2) | {-1,1}");
    auto* b = std::get_if<SetBinary>(&e->node);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->op, SetOp::unite);
    EXPECT_TRUE(std::holds_alternative<Progression>(b->lhs->node));
    EXPECT_TRUE(std::holds_alternative<FiniteSet>(b->rhs->node));

    auto d = parse_set("Z \\ {1,3}");
    auto* db = std::get_if<SetBinary>(&d->node);
    ASSERT_TRUE(db);
    EXPECT_EQ(db->op, SetOp::subtract);
    EXPECT_TRUE(std::holds_alternative<AllIntegers>(db->lhs->node));

    EXPECT_EQ(to_string(*parse_set("(apz(0,2) | {-1,1})")), "apz(0,2) | {-1,1}");
    EXPECT_EQ(to_string(*parse_set(" a p ( 1 , 2 ) ")), "ap(1,2)");
}

TEST(SetParser, Precedence) {
    // "\" binds tighter than "&", which binds tighter than "|".
    EXPECT_EQ(*parse_set("Z | N & P \\ {2}"), *parse_set("Z | (N & (P \\ {2}))"));
    EXPECT_EQ(*parse_set("Z \\ {1} \\ {2}"), *parse_set("(Z \\ {1}) \\ {2}"));
    EXPECT_EQ(to_string(*parse_set("(Z | N) & P")), "(Z | N) & P");
    EXPECT_EQ(to_string(*parse_set("Z \\ ({1} \\ {2})")), "Z \\ ({1} \\ {2})");
}

TEST(SetParser, ErrorsCarryPositions) {
    try {
        parse_set("ap(1,2) | ");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 10u);
        EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos);
    }
    try {
        parse_set("Z & Q");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_set("ap(1,0)"), ParseError);
    EXPECT_THROW(parse_set("{1,}"), ParseError);
    EXPECT_THROW(parse_set("Z)"), ParseError);
}

TEST(SetParser, PrinterRoundTrip) {
    oracle::Rng rng(61);
    for (int i = 0; i < 300; ++i) {
        auto e = random_expr(rng, 4);
        EXPECT_EQ(*parse_set(to_string(*e)), *e) << to_string(*e);
    }
}

TEST(NormalSet, DocumentedExamples) {
    auto a = norm("Z \\ apz(1,2)");
    EXPECT_EQ(a.modulus(), 2);
    EXPECT_EQ(a.residues(), (std::vector<std::int64_t>{0}));

    auto b = norm("ap(1,2) | ap(2,6)");
    EXPECT_EQ(b.modulus(), 6);
    EXPECT_EQ(b.residues(), (std::vector<std::int64_t>{1, 2, 3, 5}));
    EXPECT_EQ(density(b), Rational(2, 3));

    auto c = norm("Z \\ {5}");
    EXPECT_EQ(c.modulus(), 1);
    EXPECT_EQ(c.removed(), (std::vector<Integer>{5}));
    EXPECT_TRUE(is_cofinite(c));
    EXPECT_EQ(density(c), 1);
    EXPECT_FALSE(member(c, 5));

    auto v = norm("apz(0,2) | {-1,1}");
    EXPECT_TRUE(member(v, -1));
    EXPECT_FALSE(member(v, 3));
    EXPECT_TRUE(member(norm("P & ap(1,4)"), 13));
    EXPECT_FALSE(member(norm("P & ap(1,4)"), 9));
    EXPECT_EQ(density(norm("ap(1,2)")), Rational(1, 2));
}

TEST(NormalSet, SoundAgainstTreeEvaluation) {
    oracle::Rng rng(62);
    for (int i = 0; i < 400; ++i) {
        auto e = random_expr(rng, 4);
        NormalSet n = normalize(*e);
        for (int x = -200; x <= 200; ++x) ASSERT_EQ(member(n, x), contains(*e, x)) << to_string(*e) << " at " << x;
    }
}

TEST(NormalSet, CorrectionsAreMinimal) {
    oracle::Rng rng(63);
    for (int i = 0; i < 200; ++i) {
        NormalSet n = normalize(*random_expr(rng, 3));
        for (const auto& x : n.added()) EXPECT_FALSE(n.in_base(x));
        for (const auto& x : n.removed()) EXPECT_TRUE(n.in_base(x));
    }
}

TEST(NormalSet, PrimesRestrictions) {
    EXPECT_THROW(norm("Z \\ P"), DomainError);
    EXPECT_THROW(norm("P | ap(0,2)"), DomainError);
    auto n = norm("P | {4}");
    EXPECT_TRUE(member(n, 4));
    EXPECT_TRUE(member(n, 7));
    EXPECT_FALSE(member(n, 9));
    EXPECT_THROW(density(n), DomainError);
    auto m = norm("(P & ap(1,4)) \\ {5}");
    EXPECT_FALSE(member(m, 5));
    EXPECT_TRUE(member(m, 13));
}

TEST(NormalSet, ModulusCap) {
    NormalizeOptions tight{100};
    EXPECT_THROW(normalize(*parse_set("ap(0,7) & ap(0,11) & ap(0,13)"), tight), LimitExceeded);
    EXPECT_NO_THROW(normalize(*parse_set("ap(0,7) & ap(0,11)"), tight));
}

TEST(NormalSet, DensityAdditivity) {
    oracle::Rng rng(64);
    for (int i = 0; i < 200; ++i) {
        auto p = [&]() {
            return set_expr::progression(rng.coin() ? Progression::ascending(rng.integer(1, 20), rng.integer(1, 12))
                                                    : Progression::two_sided(rng.integer(-20, 20), rng.integer(1, 12)));
        };
        auto e1 = p(), e2 = p();
        NormalSet n1 = normalize(*e1), n2 = normalize(*e2);
        // Density is relative to the ground; compare like with like.
        if ((n1.ground() == Ground::naturals) != (n2.ground() == Ground::naturals)) continue;
        EXPECT_EQ(density(normalize(*set_expr::unite(e1, e2))) + density(normalize(*set_expr::intersect(e1, e2))),
                  density(n1) + density(n2));
    }
}

TEST(MeetsInfinitely, DocumentedExamples) {
    EXPECT_TRUE(std::holds_alternative<FinitelyMany>(
        meets_infinitely(norm("apz(0,2)"), Progression::two_sided(-1, 2))));
    for (int d = 1; d <= 9; ++d) {
        EXPECT_TRUE(std::holds_alternative<InfinitelyMany>(
            meets_infinitely(norm("Z \\ {5}"), Progression::ascending(5, d))));
    }
    auto v = meets_infinitely(norm("P"), Progression::ascending(1, 4));
    ASSERT_TRUE(std::holds_alternative<InfinitelyMany>(v));
    EXPECT_EQ(std::get<InfinitelyMany>(v).witness, Progression::ascending(5, 4));
    EXPECT_TRUE(std::holds_alternative<FinitelyMany>(meets_infinitely(norm("P"), Progression::ascending(0, 4))));
    EXPECT_TRUE(std::holds_alternative<Unknown>(meets_infinitely(norm("P"), Progression::ascending(1, 4), Integer(1))));
}

TEST(MeetsInfinitely, SoundAgainstScans) {
    oracle::Rng rng(65);
    for (int i = 0; i < 300; ++i) {
        auto e = random_expr(rng, 3);
        NormalSet n = normalize(*e);
        Progression t = rng.coin() ? Progression::ascending(rng.integer(-20, 20), rng.integer(1, 12))
                                   : Progression::two_sided(rng.integer(-20, 20), rng.integer(1, 12));
        auto v = meets_infinitely(n, t);
        if (auto* inf = std::get_if<InfinitelyMany>(&v)) {
            // Witness terms lie in both sets.
            const auto& w = inf->witness;
            Integer x = w.is_two_sided() ? w.first_at_least(-100000) : w.first();
            for (int k = 0; k < 20; ++k, x += w.step()) {
                ASSERT_TRUE(contains(*e, x) && t.contains(x)) << to_string(*e) << " " << to_string(t) << " " << x;
            }
        } else {
            for (int x = -3000; x <= 3000; ++x) {
                if (contains(*e, x) && t.contains(x)) {
                    EXPECT_TRUE(std::binary_search(n.added().begin(), n.added().end(), Integer(x)));
                }
            }
        }
    }
}

TEST(Kirch, BasicCheck) {
    EXPECT_TRUE(kirch_basic_check(1, 6));
    EXPECT_FALSE(kirch_basic_check(2, 6));
    EXPECT_FALSE(kirch_basic_check(3, 4));
    EXPECT_THROW(kirch_basic_check(0, 6), DomainError);
    EXPECT_THROW(kirch_basic_check(1, 0), DomainError);
}

TEST(NormalSet, ContainsProgression) {
    EXPECT_TRUE(contains_progression(norm("N"), Progression::ascending(5, 1)));
    EXPECT_TRUE(contains_progression(norm("ap(1,2)"), Progression::ascending(3, 6)));
    EXPECT_FALSE(contains_progression(norm("ap(1,2) \\ {9}"), Progression::ascending(3, 6)));
    EXPECT_FALSE(contains_progression(norm("N"), Progression::ascending(-1, 3)));
    EXPECT_TRUE(contains_progression(norm("Z"), Progression::ascending(-1, 3)));
}
