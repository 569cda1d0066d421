#include <gtest/gtest.h>

#include <random>

#include "wmds/coefficients.hpp"
#include "wmds/cyclotomic.hpp"
#include "wmds/ffield.hpp"

using namespace wmds;

namespace {

constexpr int Q = 13;

FFPoly P(std::vector<int> c) { return FFPoly(Q, std::move(c)); }
FFPoly one() { return FFPoly::constant(Q, 1); }
const FFPoly T = P({0, 1});

FFPoly random_monic(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> d(0, Q - 1);
    std::vector<int> c(deg + 1);
    for (int i = 0; i < deg; ++i) c[i] = d(rng);
    c[deg] = 1;
    return P(c);
}

CyclotomicInt zeta_n(int n, int e) { return CyclotomicInt::root_of_unity(n * Q, static_cast<long long>(Q) * e); }

}  // namespace

TEST(FFPoly, Serialization) {
    EXPECT_EQ(P({3, 0, 1}).to_string(), "[3,0,1]");
    EXPECT_EQ(P({3, 0, 1, 0, 0}).degree(), 2);
}

TEST(FFPoly, Arithmetic) {
    FFPoly a = P({1, 2, 3}), b = P({5, 1});
    EXPECT_EQ((a * b) / b, a);
    EXPECT_TRUE(((a * b) % b).is_zero());
    EXPECT_EQ(poly_gcd(a * b, b * b).monic(), b.monic());
    FFPoly inv = poly_inverse_mod(P({2, 1}), P({1, 0, 1}));
    EXPECT_TRUE(((inv * P({2, 1})) % P({1, 0, 1})).is_one());
}

TEST(FFPoly, Irreducibility) {
    EXPECT_TRUE(is_irreducible(T));
    EXPECT_TRUE(is_irreducible(P({2, 0, 1})));
    EXPECT_FALSE(is_irreducible(P({0, 0, 1})));
    EXPECT_FALSE(is_irreducible(P({12, 0, 1})));
    EXPECT_EQ(monic_polys(Q, 2).size(), 169u);
    EXPECT_EQ(residues_mod(P({1, 0, 1})).size(), 169u);
}

TEST(ResidueSymbol, Examples) {
    EXPECT_EQ(residue_symbol(T, P({1, 1}), 3), 0);
    EXPECT_EQ(residue_symbol(one(), P({4, 7, 1}), 3), 0);
    EXPECT_EQ(residue_symbol(T, FFPoly::constant(Q, 5), 3), 0);
    EXPECT_THROW(residue_symbol(T, P({0, 2, 1}), 3), std::domain_error);
}

TEST(ResidueSymbol, MatchesEulerCriterionOnIrreducibles) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        FFPoly b = random_monic(rng, 1 + trial % 2);
        if (!is_irreducible(b)) continue;
        FFPoly a = random_monic(rng, trial % 4);
        if (poly_gcd(a, b).degree() != 0) continue;
        for (int m : {2, 3, 6}) EXPECT_EQ(residue_symbol(a, b, m), residue_symbol_euler(a, b, m));
    }
}

TEST(ResidueSymbol, Multiplicativity) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        FFPoly a = random_monic(rng, trial % 3), b = random_monic(rng, 1 + trial % 2), c = random_monic(rng, 1 + trial % 3);
        if (poly_gcd(a * b, c).degree() != 0 || poly_gcd(a, b * c).degree() != 0) continue;
        for (int m : {3, 6}) {
            EXPECT_EQ(residue_symbol(a * b, c, m), (residue_symbol(a, c, m) + residue_symbol(b, c, m)) % m);
            EXPECT_EQ(residue_symbol(a, b * c, m), (residue_symbol(a, b, m) + residue_symbol(a, c, m)) % m);
        }
    }
}

TEST(ResidueSymbol, SquareCompatibilityAndReciprocity) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        FFPoly a = random_monic(rng, 1 + trial % 3), b = random_monic(rng, 1 + (trial / 3) % 3);
        if (poly_gcd(a, b).degree() != 0) continue;
        EXPECT_EQ(2 * residue_symbol(a, b, 6) % 6 / 2, residue_symbol(a, b, 3));
        EXPECT_EQ(residue_symbol(a, b, 3), residue_symbol(b, a, 3));
        EXPECT_EQ(residue_symbol(a, b, 6), residue_symbol(b, a, 6));
    }
}

TEST(AdditiveChar, Examples) {
    EXPECT_EQ(additive_char_index(P({3, 4, 5}), one()), 0);
    EXPECT_EQ(additive_char_index(one(), T), 1);
    EXPECT_EQ(additive_char_index(one(), T * T), 0);
    EXPECT_EQ(additive_char(one(), T), CyclotomicInt::root_of_unity(Q, 1));
}

TEST(AdditiveChar, IndependentOfResidueRepresentative) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        FFPoly den = random_monic(rng, 1 + trial % 3), num = random_monic(rng, trial % 3), s = random_monic(rng, trial % 2);
        EXPECT_EQ(additive_char_index(num + den * s, den), additive_char_index(num, den));
        EXPECT_EQ(additive_char_index(num + s, den) % Q,
                  (additive_char_index(num, den) + additive_char_index(s, den)) % Q);
    }
}

TEST(GaussSumFF, Examples) {
    EXPECT_EQ(gauss_sum_ff(1, one(), one(), 3), CyclotomicInt::from_integer(39, 1));
    CyclotomicInt g = gauss_sum_ff(1, one(), T, 3);
    EXPECT_EQ(g * g.conjugate(), CyclotomicInt::from_integer(39, 13));
}

TEST(GaussSumFF, PrimePowerRuleUpToUnitTwist) {
    CharacterData cd(3, Q);
    FFPoly u = P({1, 1});
    for (int tpow = 0; tpow < 6; ++tpow) {
        CyclotomicInt lhs = gauss_sum_ff(tpow, T * u, T * T, 3);
        int twist = (3 - tpow * residue_symbol(u, T * T, 3) % 3) % 3;
        CyclotomicInt rhs = zeta_n(3, twist) * numeric_eval(gs_prime_power(tpow, 1, 2, 3), cd);
        EXPECT_EQ(lhs, rhs) << "tpow=" << tpow;
    }
}

TEST(GaussSumFF, BruteForceTable) {
    CharacterData cd(3, Q);
    for (int l = 0; l <= 2; ++l) {
        auto table = gauss_sum_prime_power_brute_table(l, 2, cd);
        for (int t = 0; t < 3; ++t)
            for (int k = 0; k <= 2; ++k) {
                EXPECT_EQ(table[t][k], gauss_sum_prime_power_brute(t, k, l, cd));
                EXPECT_EQ(table[t][k], gauss_sum_ff(t, FFPoly::t_power(Q, k), FFPoly::t_power(Q, l), 3));
            }
    }
}

TEST(HDirect, RankOne) {
    EXPECT_EQ(h_direct({one()}, {P({2, 1})}, 3), CyclotomicInt::from_integer(39, 1));
    for (const FFPoly& c : {T, T * P({1, 1}), T * T})
        for (const FFPoly& m : {one(), T, P({1, 1})}) EXPECT_EQ(h_direct({c}, {m}, 3), gauss_sum_ff(2, m, c, 3));
}

TEST(HDirect, RankTwoFixture) {
    CyclotomicInt v = h_direct({T, one()}, {one(), one()}, 3);
    std::vector<std::int64_t> expected{0, 1, -1, 1, 2, 0, 0, 2, 0, 0, 0, -1, -1, 1, 1, 0, 1, 0, -1, 2, 0, -1, 2, -1};
    ASSERT_EQ(v.coeffs().size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(v.coeffs()[i], expected[i]);
    CoefficientEngine eng(3);
    EXPECT_EQ(v, numeric_eval(eng.h_inductive({1, 0}, {0, 0}), CharacterData(3, Q)));
}

TEST(HDirect, RejectsZeroArguments) {
    EXPECT_THROW(h_direct({T}, {FFPoly::constant(Q, 0)}, 3), std::invalid_argument);
    EXPECT_THROW(h_direct({T, T, T}, {one(), one(), one()}, 3), std::invalid_argument);
}

TEST(Twist, TrivialFactors) {
    EXPECT_EQ(twist_factor_m({T, T}, {one(), one()}, 3) % 3, 0);
    EXPECT_EQ(twist_factor_mu({T, T}, {one(), one()}, 3) % 3, 0);
}

TEST(Twist, RankOneFirstArgument) {
    FFPoly mp = P({1, 1});
    for (const FFPoly& c : {T, T * T})
        for (const FFPoly& m : {one(), T}) {
            int e = twist_factor_m({c}, {mp}, 3);
            EXPECT_EQ(h_direct({c}, {m * mp}, 3), zeta_n(3, e) * h_direct({c}, {m}, 3));
        }
}

TEST(Twist, RankTwoFirstArgument) {
    std::vector<FFPoly> C{T, T}, mp{P({1, 1}), one()};
    for (const auto& m : std::vector<std::vector<FFPoly>>{{one(), one()}, {T, one()}, {one(), T}}) {
        int e = twist_factor_m(C, mp, 3);
        EXPECT_EQ(h_direct(C, {m[0] * mp[0], m[1] * mp[1]}, 3), zeta_n(3, e) * h_direct(C, m, 3));
    }
}

TEST(Twist, SecondArgument) {
    std::vector<FFPoly> C{T, one()}, Cp{P({1, 1}), one()};
    for (const auto& m : std::vector<std::vector<FFPoly>>{{one(), one()}, {T, one()}, {P({2, 1}), T}}) {
        int e = twist_factor_mu(C, Cp, 3);
        EXPECT_EQ(h_direct({C[0] * Cp[0], C[1] * Cp[1]}, m, 3), zeta_n(3, e) * h_direct(C, m, 3) * h_direct(Cp, m, 3));
    }
    FFPoly c = T, cp = P({1, 1});
    int e = twist_factor_mu({c}, {cp}, 3);
    EXPECT_EQ(h_direct({c * cp}, {one()}, 3), zeta_n(3, e) * h_direct({c}, {one()}, 3) * h_direct({cp}, {one()}, 3));
}

TEST(Twist, RejectsCommonFactors) {
    EXPECT_THROW(twist_factor_m({T}, {T}, 3), std::domain_error);
    EXPECT_THROW(twist_factor_mu({T}, {T * P({1, 1})}, 3), std::domain_error);
}
