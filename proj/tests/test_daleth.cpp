#include <gtest/gtest.h>

#include <set>

#include "wmds/coefficients.hpp"
#include "wmds/daleth.hpp"
#include "wmds/verify.hpp"

using namespace wmds;

TEST(Decompose, SingleComponent) {
    ComponentDecomposition d = decompose({2, 2, 1}, {1, 1, 1});
    ASSERT_EQ(d.h(), 1);
    EXPECT_EQ(d.components[0].l, 1);
    EXPECT_EQ(d.components[0].r, 3);
}

TEST(Decompose, TwoComponents) {
    ComponentDecomposition d = decompose({3, 2, 1}, {1, 1, 1});
    ASSERT_EQ(d.h(), 2);
    EXPECT_EQ(d.components[0].l, 1);
    EXPECT_EQ(d.components[0].r, 1);
    EXPECT_EQ(d.components[1].l, 2);
    EXPECT_EQ(d.components[1].r, 3);
    EXPECT_EQ(d.components[0].b, 1);
    EXPECT_EQ(d.components[1].a, 1);
}

TEST(Decompose, RankOneAndInvariants) {
    ComponentDecomposition one = decompose({4}, {2});
    ASSERT_EQ(one.h(), 1);
    EXPECT_EQ(one.components[0].a, 0);
    EXPECT_EQ(one.components[0].b, 0);
    for (const auto& k : int_grid(3, 0, 3)) {
        ComponentDecomposition d = decompose(k, {2, 2, 2});
        int next = 1;
        for (const auto& c : d.components) {
            EXPECT_EQ(c.l, next);
            next = c.r + 1;
            if (c.l == 1) EXPECT_EQ(c.a, 0);
            if (c.r == 3) EXPECT_EQ(c.b, 0);
        }
        EXPECT_EQ(next, 4);
    }
}

TEST(PsiSplit, SingletonComponentIsPrime) {
    ShortPattern t(2, {2, 0, 1});
    std::vector<int> k = weight_k(t);
    ComponentDecomposition d = decompose(k, {1, 1});
    ASSERT_EQ(d.h(), 2);
    auto blocks = psi_split(t, k);
    ASSERT_EQ(blocks.size(), 2u);
    EXPECT_EQ(blocks[0], ShortPattern(1, {t.prime(1)}));
}

TEST(PsiSplit, WeightMismatchRejected) {
    EXPECT_THROW(psi_split(ShortPattern(2, {1, 0, 0}), {0, 0}), std::invalid_argument);
}

TEST(PsiSplit, InjectiveOnEachWeight) {
    std::vector<int> mu{2, 2};
    std::map<std::vector<int>, std::set<std::vector<ShortPattern>>> images;
    std::map<std::vector<int>, std::size_t> sizes;
    for (const auto& t : enumerate_bzl_short(mu)) {
        auto k = weight_k(t);
        if (!is_strict(k, mu)) continue;
        images[k].insert(psi_split(t, k));
        ++sizes[k];
    }
    for (const auto& [k, s] : images) EXPECT_EQ(s.size(), sizes[k]);
}

TEST(GPsi, ZeroPatternIsOne) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(g_psi(ShortPattern(3, {0, 0, 0, 0, 0}), {1, 2, 1}, n), GaussElement::one(n));
}

TEST(GPsi, SingleComponentMatchesDelta) {
    for (int n : {2, 3, 4, 6})
        for (int r = 1; r <= 3; ++r)
            for (const auto& mu : int_grid(r, 1, 2))
                for (const auto& t : enumerate_bzl_short(mu)) {
                    auto k = weight_k(t);
                    if (!is_strict(k, mu) || decompose(k, mu).h() != 1) continue;
                    EXPECT_EQ(g_psi(t, mu, n), array_weight(build_array(t, mu, ArrayKind::Delta), n))
                        << "n=" << n << " t=" << t.to_string();
                }
}

TEST(Daleth, ZeroWeightAndRankOne) {
    for (int n = 1; n <= 6; ++n) {
        CoefficientEngine eng(n);
        EXPECT_EQ(eng.h_daleth({0, 0, 0}, {1, 1, 0}), GaussElement::one(n));
        for (int k = 0; k <= 3; ++k)
            for (int m = 0; m <= 2; ++m) EXPECT_EQ(eng.h_daleth({k}, {m}), eng.h_inductive({k}, {m}));
        EXPECT_TRUE(eng.h_daleth({1, 0}, {0, -1}).is_zero());
    }
}

TEST(RootSystem, Sizes) {
    for (int r = 1; r <= 4; ++r) {
        RootSystemC rs(r);
        EXPECT_EQ(static_cast<int>(rs.positive_roots().size()), r * r);
        long long order = 1 << r;
        for (int i = 2; i <= r; ++i) order *= i;
        EXPECT_EQ(static_cast<long long>(rs.weyl_group().size()), order);
    }
}

TEST(Stable, IdentityAndSupport) {
    auto entries = stable_support_and_values({0, 0}, 11);
    ASSERT_EQ(entries.size(), 8u);
    std::set<std::vector<int>> ks;
    for (const auto& e : entries) {
        ks.insert(e.k);
        if (e.k == std::vector<int>{0, 0}) EXPECT_EQ(e.value, GaussElement::one(11));
    }
    EXPECT_EQ(ks.size(), 8u);
}

TEST(Stable, LongElementMatchesInductive) {
    RootSystemC rs(2);
    auto entries = stable_support_and_values({0, 0}, 11);
    CoefficientEngine eng(11);
    for (const auto& e : entries) {
        if (rs.inversion_set(e.w).size() != 4) continue;
        EXPECT_EQ(eng.h_inductive(e.k, {0, 0}), e.value);
        EXPECT_FALSE(e.value.is_zero());
    }
}

TEST(Stable, BoundEnforced) {
    EXPECT_EQ(stability_bound({1, 1}, false), 3);
    EXPECT_TRUE(is_stable_degree({1, 1}, 3));
    EXPECT_FALSE(is_stable_degree({2, 1}, 3));
    try {
        stable_support_and_values({1, 0}, 3);
        FAIL() << "expected an exception";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find(std::to_string(stability_bound({2, 1}, false))), std::string::npos);
    }
}

TEST(Stable, SmallSweepPasses) {
    SuiteReport rep = verify_stable({1, 0}, stability_bound({2, 1}, false));
    EXPECT_TRUE(rep.passed()) << rep.text();
}
