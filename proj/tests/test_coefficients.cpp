#include <gtest/gtest.h>

#include <random>

#include "wmds/coefficients.hpp"
#include "wmds/verify.hpp"

using namespace wmds;

namespace {

std::vector<int> rev(std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(Inductive, ZeroWeightIsOne) {
    for (int n : {1, 2, 3, 4}) {
        CoefficientEngine eng(n);
        EXPECT_EQ(eng.h_inductive({0, 0, 0}, {1, 0, 2}), GaussElement::one(n));
    }
}

TEST(Inductive, RankOneExample) {
    CoefficientEngine eng(3);
    EXPECT_EQ(eng.h_inductive({2}, {1}), GaussElement::q_power(3, 1) * GaussElement::gauss(3, 1));
}

TEST(Inductive, RankOneIsQuadraticGaussSum) {
    for (int n = 1; n <= 6; ++n) {
        CoefficientEngine eng(n);
        for (int m = 0; m <= 3; ++m)
            for (int k = 0; k <= m + 1; ++k) EXPECT_EQ(eng.h_inductive({k}, {m}), gs_prime_power(2, m, k, n)) << n << " " << k << " " << m;
    }
}

TEST(Inductive, NegativeMIsZero) {
    CoefficientEngine eng(3);
    EXPECT_TRUE(eng.h_inductive({1, 0}, {-1, 0}).is_zero());
}

TEST(Inductive, FrozenFixturesDegreeFour) {
    CoefficientEngine eng(4);
    const std::vector<std::pair<std::vector<int>, std::string>> fixtures{
        {{0, 0}, "1"}, {{0, 1}, "0"}, {{0, 2}, "-q"}, {{0, 3}, "0"},
        {{1, 0}, "0"}, {{1, 1}, "0"}, {{1, 2}, "0"}, {{1, 3}, "0"},
        {{2, 0}, "q*g2"}, {{2, 1}, "0"}, {{2, 2}, "-q^2*g2 + q^3*g2"}, {{2, 3}, "0"},
        {{3, 0}, "0"}, {{3, 1}, "0"}, {{3, 2}, "0"}, {{3, 3}, "0"}};
    for (const auto& [k, value] : fixtures) EXPECT_EQ(eng.h_inductive(k, {1, 1}).to_string(), value);
}

TEST(Inductive, MemoizationSound) {
    CoefficientEngine shared(3);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> e(0, 3), len(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        int r = len(rng);
        std::vector<int> k(r), m(r);
        for (int i = 0; i < r; ++i) {
            k[i] = e(rng);
            m[i] = e(rng) % 3;
        }
        CoefficientEngine fresh(3);
        EXPECT_EQ(shared.h_inductive(k, m), fresh.h_inductive(k, m));
    }
    GaussElement before = shared.h_inductive({2, 1}, {1, 1});
    shared.clear();
    EXPECT_EQ(shared.h_inductive({2, 1}, {1, 1}), before);
}

TEST(Bzl, ZeroWeightIsOne) {
    CoefficientEngine eng(3);
    EXPECT_EQ(eng.h_bzl_inductive({0, 0}, {1, 1}), GaussElement::one(3));
}

TEST(Bzl, EvenDegreeRejected) {
    CoefficientEngine eng(4);
    try {
        eng.h_bzl_inductive({1}, {1});
        FAIL() << "expected an exception";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("use h_daleth"), std::string::npos);
    }
}

TEST(Bzl, MatchesInductiveUnderReversal) {
    for (int n : {3, 5}) {
        CoefficientEngine eng(n);
        EXPECT_EQ(eng.h_bzl_inductive({1, 1}, {1, 1}), eng.h_inductive({1, 1}, {1, 1}));
        for (const auto& kappa : int_grid(2, 0, 3))
            for (const auto& ell : int_grid(2, 0, 2))
                EXPECT_EQ(eng.h_bzl_inductive(kappa, ell), eng.h_inductive(rev(kappa), rev(ell)));
        EXPECT_EQ(eng.coefficient(Description::BZL, {2, 1}, {1, 0}), eng.h_bzl_inductive({1, 2}, {0, 1}));
    }
}

TEST(Bzl, FullPatternsRankOne) {
    auto full = enumerate_bzl({2});
    auto rows = enumerate_bzl_short({2});
    ASSERT_EQ(full.size(), rows.size());
    for (std::size_t i = 0; i < full.size(); ++i) EXPECT_EQ(full[i].rows[0], rows[i]);
}

TEST(Bzl, FullPatternCountRankTwo) {
    std::vector<int> mu{1, 1};
    std::size_t expected = 0;
    for (const auto& t : enumerate_bzl_short(mu)) {
        std::vector<int> next = next_row_mu(t, mu);
        if (next[0] > 0) expected += enumerate_bzl_short(next).size();
    }
    EXPECT_EQ(enumerate_bzl(mu).size(), expected);
}

TEST(Bzl, DirectSumMatchesInductive) {
    int n = 3;
    CoefficientEngine eng(n);
    for (int r = 2; r <= 3; ++r)
        for (const auto& ell : int_grid(r, 0, 1))
            for (const auto& kappa : int_grid(r, 0, 3))
                EXPECT_EQ(h_bzl_direct(kappa, ell, n), eng.h_bzl_inductive(kappa, ell));
}
