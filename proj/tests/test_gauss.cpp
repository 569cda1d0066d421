#include <gtest/gtest.h>

#include "wmds/cyclotomic.hpp"
#include "wmds/gauss.hpp"

using namespace wmds;

namespace {

GaussElement g(int n, int t) { return GaussElement::gauss(n, t); }
GaussElement q(int n, int e) { return GaussElement::q_power(n, e); }

}  // namespace

TEST(Normalize, ComplementaryPairBecomesQ) {
    EXPECT_EQ(g(3, 1) * g(3, 2), q(3, 1));
    GaussMonomial m = normalize(0, {{1, 1}, {2, 1}}, 3);
    EXPECT_EQ(m.q_exp, 1);
    EXPECT_TRUE(is_canonical(m, 3));
}

TEST(Normalize, CanonicalSquareIsKept) {
    GaussElement x = g(3, 1) * g(3, 1);
    ASSERT_EQ(x.terms().size(), 1u);
    EXPECT_EQ(x.terms()[0].mono.g[1], 2);
    EXPECT_EQ(x.terms()[0].mono.q_exp, 0);
}

TEST(Normalize, SelfComplementaryIndex) {
    GaussElement x = g(4, 2) * g(4, 2) * g(4, 2) * q(4, 1);
    EXPECT_EQ(x, q(4, 2) * g(4, 2));
    CharacterData cd(4, 13);
    EXPECT_EQ(numeric_eval(g(4, 2) * g(4, 2), cd), CyclotomicInt::from_integer(cd.M(), 13));
    EXPECT_EQ(cd.gauss_value(2) * cd.gauss_value(2), CyclotomicInt::from_integer(cd.M(), 13));
}

TEST(Normalize, RejectsIndexDivisibleByN) {
    EXPECT_THROW(normalize(0, {{3, 1}}, 3), std::invalid_argument);
    EXPECT_THROW(GaussElement::gauss(3, 6), std::invalid_argument);
}

TEST(Normalize, IndicesReducedModN) { EXPECT_EQ(g(3, 4), g(3, 1)); }

TEST(GaussElement, RingAxioms) {
    int n = 5;
    GaussElement a = g(n, 1) + q(n, 2).scaled(3), b = g(n, 2) - q(n, 1), c = g(n, 4) * g(n, 3);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * GaussElement::one(n), a);
}

TEST(GsPrimePower, RuleExamples) {
    EXPECT_EQ(gs_prime_power(1, 0, 1, 3), g(3, 1));
    EXPECT_EQ(gs_prime_power(2, 3, 3, 3), q(3, 3) - q(3, 2));
    EXPECT_TRUE(gs_prime_power(1, 1, 3, 3).is_zero());
    EXPECT_EQ(gs_prime_power(3, 1, 2, 3), -q(3, 1));
}

TEST(GsPrimePower, ZeroModulusIsOne) {
    for (int k = 0; k < 4; ++k) EXPECT_EQ(gs_prime_power(1, k, 0, 3), GaussElement::one(3));
}

TEST(GsPrimePower, DefaultFieldSizes) {
    EXPECT_EQ(default_field_size(2), 17);
    EXPECT_EQ(default_field_size(3), 13);
    EXPECT_EQ(default_field_size(4), 17);
    EXPECT_EQ(default_field_size(5), 41);
    EXPECT_EQ(default_field_size(6), 73);
}

TEST(NumericEval, Examples) {
    CharacterData cd(3, 13);
    EXPECT_EQ(numeric_eval(q(3, 2), cd), CyclotomicInt::from_integer(cd.M(), 169));
    EXPECT_EQ(numeric_eval(g(3, 1), cd) * numeric_eval(g(3, 2), cd), CyclotomicInt::from_integer(cd.M(), 13));
    CyclotomicInt g1 = numeric_eval(g(3, 1), cd);
    EXPECT_EQ(g1 * g1.conjugate(), CyclotomicInt::from_integer(cd.M(), 13));
}

TEST(NumericEval, Homomorphism) {
    CharacterData cd(4, 17);
    GaussElement x = g(4, 1) + q(4, 1), y = g(4, 3) * g(4, 3) - g(4, 2);
    EXPECT_EQ(numeric_eval(x * y, cd), numeric_eval(x, cd) * numeric_eval(y, cd));
    EXPECT_EQ(numeric_eval(x + y, cd), numeric_eval(x, cd) + numeric_eval(y, cd));
}

TEST(NumericEval, MismatchedDegreeThrows) {
    CharacterData cd(3, 13);
    EXPECT_THROW(numeric_eval(g(4, 1), cd), std::invalid_argument);
}

TEST(Cyclotomic, RootsOfUnity) {
    CyclotomicInt z = CyclotomicInt::root_of_unity(39, 1);
    CyclotomicInt p = CyclotomicInt::from_integer(39, 1);
    for (int i = 0; i < 39; ++i) p *= z;
    EXPECT_EQ(p, CyclotomicInt::from_integer(39, 1));
    CyclotomicInt s(39);
    for (int i = 0; i < 39; ++i) s += CyclotomicInt::root_of_unity(39, i);
    EXPECT_TRUE(s.is_zero());
}
