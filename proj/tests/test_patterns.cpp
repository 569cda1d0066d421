#include <gtest/gtest.h>

#include <set>

#include "wmds/patterns.hpp"
#include "wmds/verify.hpp"

using namespace wmds;

namespace {

GaussElement g(int n, int t) { return GaussElement::gauss(n, t); }
GaussElement q(int n, int e) { return GaussElement::q_power(n, e); }

}  // namespace

TEST(Enumerate, RankOne) {
    auto pats = enumerate_patterns({1});
    ASSERT_EQ(pats.size(), 2u);
    EXPECT_EQ(pats[0], ShortPattern(1, {0}));
    EXPECT_EQ(pats[1], ShortPattern(1, {1}));
}

TEST(Enumerate, RankTwoAgainstLoopOracle) {
    std::set<ShortPattern> oracle;
    for (int d1 = 0; d1 <= 1; ++d1)
        for (int d2 = 0; d2 <= 1; ++d2)
            for (int d3 = 0; d2 + d3 <= 1 + d1; ++d3) oracle.insert(ShortPattern(2, {d1, d2, d3}));
    auto pats = enumerate_patterns({1, 1});
    EXPECT_EQ(std::set<ShortPattern>(pats.begin(), pats.end()), oracle);
    EXPECT_EQ(pats.size(), oracle.size());
}

TEST(Enumerate, CQEqualsBZL) {
    EXPECT_EQ(enumerate_patterns({2, 1}), enumerate_bzl_short({2, 1}));
    for (const auto& t : enumerate_patterns({2, 1})) {
        EXPECT_TRUE(in_cq(t, {2, 1}));
        EXPECT_TRUE(in_bzl(t, {2, 1}));
    }
    EXPECT_TRUE(verify_lemma73(3, 2).passed());
}

TEST(Weight, Examples) {
    WeightVector w = weight_of(ShortPattern(3, {0, 0, 0, 0, 0}), {1, 1, 1});
    EXPECT_EQ(w.k, (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(w.cls, Resonance::TotallyResonant);
    EXPECT_EQ(weight_k(ShortPattern(1, {3})), (std::vector<int>{3}));
    EXPECT_EQ(weight_k(ShortPattern(2, {1, 1, 1})), (std::vector<int>{4, 2}));
}

TEST(Weight, ClassificationDependsOnlyOnWeight) {
    for (const auto& mu : int_grid(3, 1, 2))
        for (const auto& [k, pats] : patterns_by_weight(mu)) {
            WeightVector ref = classify(k, mu);
            for (const auto& t : pats) {
                WeightVector w = weight_of(t, mu);
                EXPECT_EQ(w.cls, ref.cls);
                EXPECT_EQ(w.i0, ref.i0);
                EXPECT_EQ(w.a, ref.a);
            }
        }
}

TEST(Arrays, RankOneDecorations) {
    for (int d = 0; d <= 2; ++d) {
        ShortPattern t(1, {d});
        DecoratedArray G = build_array(t, {2}, ArrayKind::Gamma), D = build_array(t, {2}, ArrayKind::Delta);
        ASSERT_EQ(G.entries.size(), 1u);
        ASSERT_EQ(D.entries.size(), 1u);
        EXPECT_EQ(G.entries[0].value, d);
        EXPECT_EQ(D.entries[0].value, 2 * d);
        EXPECT_EQ(G.entries[0].circled, d == 0);
        EXPECT_EQ(G.entries[0].boxed, d == 2);
        EXPECT_EQ(D.entries[0].circled, d == 0);
        EXPECT_EQ(D.entries[0].boxed, d == 2);
    }
}

TEST(Arrays, ZeroPatternIsCircledWithWeightOne) {
    ShortPattern t(3, {0, 0, 0, 0, 0});
    for (ArrayKind kind : {ArrayKind::Gamma, ArrayKind::Delta}) {
        DecoratedArray arr = build_array(t, {2, 2, 2}, kind);
        for (const auto& e : arr.entries) EXPECT_TRUE(e.circled);
        EXPECT_EQ(array_weight(arr, 3), GaussElement::one(3));
    }
}

TEST(Arrays, RankOneWeights) {
    int n = 3;
    ShortPattern boxed(1, {2}), plain(1, {1});
    EXPECT_EQ(array_weight(build_array(boxed, {2}, ArrayKind::Gamma), n), q(n, 1) * g(n, 1));
    EXPECT_EQ(array_weight(build_array(boxed, {2}, ArrayKind::Delta), n), q(n, 1) * g(n, 1));
    EXPECT_TRUE(array_weight(build_array(plain, {2}, ArrayKind::Gamma), n).is_zero());
    EXPECT_TRUE(array_weight(build_array(plain, {2}, ArrayKind::Delta), n).is_zero());
}

TEST(Arrays, DumpFormat) {
    DecoratedArray arr = build_array(ShortPattern(1, {2}), {2}, ArrayKind::Delta);
    std::string s = arr.dump();
    EXPECT_NE(s.find("4[B]"), std::string::npos);
    EXPECT_EQ(s.find("[C]"), std::string::npos);
}

TEST(Arrays, IotaKindsNeedN) {
    ShortPattern t(1, {1});
    EXPECT_THROW(build_array(t, {2}, ArrayKind::GammaIota), std::invalid_argument);
    EXPECT_NO_THROW(build_array(t, {2}, ArrayKind::GammaIota, 3));
}

TEST(Arrays, StrictnessAgreesBetweenGammaAndIota) {
    int n = 3;
    for (const auto& mu : int_grid(2, 1, 3))
        for (const auto& [k, pats] : patterns_by_weight(mu)) {
            if (!is_strict(k, mu)) continue;
            int r = static_cast<int>(k.size());
            if (k[0] - eps(2, r) * k[1] >= mu[r - 1]) continue;
            int N = n * ((k[0] + 1 + n - 1) / n);
            for (const auto& t : pats)
                EXPECT_EQ(build_array(t, mu, ArrayKind::Gamma).strict(), build_array(t, mu, ArrayKind::GammaIota, N).strict())
                    << t.to_string();
        }
}

TEST(Split, RankTwoClassI) {
    WeightVector w = weight_of(ShortPattern(2, {1, 0, 0}), {2, 2});
    EXPECT_EQ(w.cls, Resonance::ClassI);
    EXPECT_EQ(w.i0, 1);
    Split s = classify_and_split(ShortPattern(2, {1, 0, 0}), {2, 2});
    EXPECT_EQ(s.t_star, ShortPattern(1, {0}));
    EXPECT_EQ(s.t_sharp, ShortPattern(1, {0}));
}

TEST(Split, RankThreeShape) {
    ShortPattern t(3, {1, 2, 0, 1, 1});
    WeightVector w = weight_of(t, {3, 3, 3});
    ASSERT_EQ(w.i0, 2);
    ASSERT_EQ(w.cls, Resonance::ClassI);
    Split s = classify_and_split(t, {3, 3, 3});
    EXPECT_EQ(s.t_star.d, (std::vector<int>{1, t.prime(2), 1}));
    EXPECT_EQ(s.t_sharp.d, (std::vector<int>{0}));
}

TEST(Split, TotallyResonantRejected) {
    EXPECT_THROW(classify_and_split(ShortPattern(2, {1, 1, 1}), {2, 2}), std::invalid_argument);
}

TEST(Split, InjectiveOnEachWeight) {
    std::vector<int> mu{2, 2};
    for (const auto& [k, pats] : patterns_by_weight(mu)) {
        if (!is_strict(k, mu) || classify(k, mu).cls == Resonance::TotallyResonant) continue;
        std::set<std::pair<ShortPattern, ShortPattern>> images;
        for (const auto& t : pats) {
            Split s = classify_and_split(t, mu);
            images.emplace(s.t_star, s.t_sharp);
        }
        EXPECT_EQ(images.size(), pats.size());
    }
}

TEST(StatementA, ZeroWeight) {
    StatementASums s = statement_a_sums({0, 0}, {2, 2}, 3);
    EXPECT_EQ(s.h_gamma, GaussElement::one(3));
    EXPECT_EQ(s.h_delta, GaussElement::one(3));
    EXPECT_EQ(s.h_gamma_iota, s.h_delta_iota);
}

TEST(StatementA, RankOneExample) {
    StatementASums s = statement_a_sums({2}, {2}, 3);
    EXPECT_EQ(s.h_gamma, q(3, 1) * g(3, 1));
    EXPECT_EQ(s.h_delta, q(3, 1) * g(3, 1));
    EXPECT_EQ(s.h_gamma_iota, s.h_delta_iota);
}

TEST(StatementA, RankTwoExhaustive) {
    std::vector<int> mu{2, 2};
    for (const auto& [k, pats] : patterns_by_weight(mu)) {
        if (!is_strict(k, mu)) continue;
        StatementASums s = statement_a_sums(k, mu, 3);
        EXPECT_EQ(s.h_gamma, s.h_delta);
        EXPECT_EQ(s.h_gamma_iota, s.h_delta_iota);
        StatementASums s2 = statement_a_sums(k, mu, 3, s.N + 3);
        EXPECT_EQ(s2.h_gamma_iota, s2.h_delta_iota);
    }
}

TEST(StatementA, NonStrictRejected) {
    std::vector<int> mu{1, 1};
    EXPECT_FALSE(is_strict({0, 3}, mu));
    EXPECT_THROW(statement_a_sums({0, 3}, mu, 3), std::invalid_argument);
}

TEST(PrimedArrays, TotallyResonantMatch) {
    for (int n : {3, 5})
        for (int r = 2; r <= 3; ++r)
            for (const auto& mu : int_grid(r, 1, 3))
                for (const auto& t : enumerate_patterns(mu)) {
                    WeightVector w = weight_of(t, mu);
                    if (!w.strict || w.cls != Resonance::TotallyResonant) continue;
                    EXPECT_EQ(array_weight(build_array(t, mu, ArrayKind::Gamma), n),
                              array_weight(build_array(t, mu, ArrayKind::GammaPrime), n))
                        << t.to_string();
                    EXPECT_EQ(array_weight(build_array(t, mu, ArrayKind::Delta), n),
                              array_weight(build_array(t, mu, ArrayKind::DeltaPrime), n))
                        << t.to_string();
                }
}

TEST(PrimedArrays, ClassTwoGammaMatch) {
    for (int n : {3, 5})
        for (int r = 2; r <= 3; ++r)
            for (const auto& mu : int_grid(r, 1, 3))
                for (const auto& t : enumerate_patterns(mu)) {
                    WeightVector w = weight_of(t, mu);
                    if (!w.strict || w.cls != Resonance::ClassII) continue;
                    EXPECT_EQ(array_weight(build_array(t, mu, ArrayKind::Gamma), n),
                              array_weight(build_array(t, mu, ArrayKind::GammaPrime), n))
                        << t.to_string();
                }
}

TEST(StatementA, IotaSumsShiftWithN) {
    int n = 3;
    for (int r = 1; r <= 3; ++r)
        for (const auto& mu : int_grid(r, 1, 2))
            for (const auto& [k, pats] : patterns_by_weight(mu)) {
                if (!is_strict(k, mu)) continue;
                StatementASums a = statement_a_sums(k, mu, n);
                StatementASums b = statement_a_sums(k, mu, n, a.N + n);
                EXPECT_EQ(b.h_gamma_iota, a.h_gamma_iota.shift_q(n * (2 * r - 1)));
                EXPECT_EQ(b.h_delta_iota, a.h_delta_iota.shift_q(n * (2 * r - 1)));
            }
}
