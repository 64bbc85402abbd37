#include <gtest/gtest.h>

#include <algorithm>

#include "ptconf/io.hpp"
#include "ptconf/pointconf.hpp"
#include "ptconf/verify.hpp"

using namespace ptconf;

TEST(Json, PoincarePolynomial) {
  EXPECT_EQ(io::dump(io::to_json(poincare_dm(3, 5))), R"({"unit":"q^{1/2}","coeffs":{"-2":"1","0":"5","2":"1"}})");
  EXPECT_EQ(io::dump(io::to_json(poincare_dm(2, 4))), R"({"unit":"q^{1/2}","coeffs":{"-1":"-1","1":"-1"}})");
  EXPECT_EQ(io::dump(io::to_json(LaurentHalf())), R"({"unit":"q^{1/2}","coeffs":{}})");
}

TEST(Json, KeysAscendNumerically) {
  const LaurentHalf p = LaurentHalf::q_half_power(-10) + LaurentHalf::q_half_power(-2) + LaurentHalf::monomial(frac(3, 4), 9);
  EXPECT_EQ(io::dump(io::to_json(p)), R"({"unit":"q^{1/2}","coeffs":{"-10":"1","-2":"1","9":"3/4"}})");
}

TEST(Json, Scalars) {
  EXPECT_EQ(io::dump(io::to_json(BigInt(-12))), R"("-12")");
  EXPECT_EQ(io::dump(io::to_json(frac(6, -4))), R"("-3/2")");
  EXPECT_EQ(io::dump(io::to_json(std::vector<BigInt>{1, 12, 620})), R"(["1","12","620"])");
}

TEST(CoefficientRow, Examples) {
  EXPECT_EQ(io::coefficient_row(poincare_dm(3, 5)), "1,5,1");
  EXPECT_EQ(io::coefficient_row(z_sequence(4, ZForm::exp_form)[3]), "1,7,29,64,29,7,1");
  EXPECT_EQ(io::coefficient_row(LaurentHalf()), "0");
}

TEST(Verify, SuiteNames) {
  const auto names = suite_names();
  EXPECT_EQ(names.size(), 12u);
  for (const char* n : {"algebra", "ztable", "dt", "duality", "palindromic", "oracle", "r1", "framed", "gw", "floor", "trees", "twopoint"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
  EXPECT_THROW(run_suites("nope"), std::invalid_argument);
}

TEST(Verify, EverySuitePasses) {
  for (const auto& s : run_suites("all")) {
    EXPECT_FALSE(s.checks.empty()) << s.name;
    for (const auto& c : s.checks) EXPECT_TRUE(c.pass) << s.name << ": " << c.description << " (" << c.witness << ")";
  }
}

TEST(Verify, JsonShape) {
  const auto j = to_json(run_suite("duality"));
  EXPECT_EQ(j["suite"], "duality");
  EXPECT_TRUE(j["pass"].get<bool>());
  ASSERT_FALSE(j["checks"].empty());
  EXPECT_TRUE(j["checks"][0].contains("witness"));
}
