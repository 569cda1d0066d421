#include <gtest/gtest.h>

#include "wmds/coefficients.hpp"
#include "wmds/json_io.hpp"
#include "wmds/verify.hpp"

using namespace wmds;

TEST(JsonIo, GaussRoundTrip) {
    int n = 5;
    GaussElement x = GaussElement::gauss(n, 1) * GaussElement::gauss(n, 3).scaled(-4) + GaussElement::q_power(n, 2);
    json j = to_json(x);
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(gauss_from_json(j), x);
    EXPECT_EQ(gauss_from_json(json::parse(j.dump())), x);
    EXPECT_EQ(to_json(GaussElement::zero(3)).dump(), R"({"n":3,"terms":[]})");
}

TEST(JsonIo, CyclotomicSerialization) {
    json j = to_json(CyclotomicInt::from_integer(39, 13));
    EXPECT_EQ(j["M"], 39);
    EXPECT_EQ(j["coeffs"].size(), 24u);
    EXPECT_EQ(j["coeffs"][0], 13);
}

TEST(JsonIo, CsvQuoting) {
    EXPECT_EQ(csv_field("abc"), "abc");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(join_ints({1, 2, 3}), "1 2 3");
}

TEST(JsonIo, TableWriters) {
    TableRow row;
    row.k = {2};
    row.m = {1};
    row.value = GaussElement::q_power(3, 1) * GaussElement::gauss(3, 1);
    std::string csv = table_to_csv({row}, false);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,m,value,json");
    EXPECT_NE(csv.find("2,1,q*g1,"), std::string::npos);
    json j = json::parse(table_to_json({row}, false));
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(gauss_from_json(j[0]["value"]), row.value);
}

TEST(Verify, IntGrid) {
    auto g = int_grid(2, 0, 1);
    ASSERT_EQ(g.size(), 4u);
    EXPECT_EQ(g[1], (std::vector<int>{0, 1}));
    EXPECT_TRUE(int_grid(1, 2, 1).empty());
}

TEST(Verify, SmallSuitesPass) {
    EXPECT_TRUE(verify_lemma73(2, 2).passed());
    EXPECT_TRUE(verify_statement_a(3, {{1, 2}, {2, 2}}).passed());
    EXPECT_TRUE(verify_thm71(3, 2, 2, 1).passed());
    EXPECT_TRUE(verify_gauss_oracle(3, 13, 2).passed());
    EXPECT_TRUE(verify_ff_crystal(3, 13, 1, 2).passed());
    EXPECT_TRUE(verify_twisted(3, 13, 2).passed());
}

TEST(Verify, ReportsAreThreadIndependent) {
    EXPECT_EQ(verify_thm82(3, 2, 2, 1, 1).text(), verify_thm82(3, 2, 2, 1, 4).text());
    EXPECT_EQ(verify_statement_a(5, {{2, 1}}, 1).text(), verify_statement_a(5, {{2, 1}}, 3).text());
}

TEST(Verify, FailureReportsCounterexample) {
    SuiteReport rep = verify_thm82(3, 2, 1, 1);
    if (!rep.passed()) EXPECT_FALSE(rep.first_failure.empty());
    EXPECT_NE(rep.text().find("suite thm82"), std::string::npos);
    EXPECT_EQ(rep.to_json()["checked"], rep.checked);
}
