#include <gtest/gtest.h>

#include <cmath>

#include "jmb/errors.hpp"
#include "jmb/exactnum.hpp"
#include "oracles.hpp"

using jmb::Nat;

TEST(Factorial, SmallValues) {
  EXPECT_EQ(jmb::factorial(0), Nat(1));
  EXPECT_EQ(jmb::factorial(1), Nat(1));
  EXPECT_EQ(jmb::factorial(10), Nat(3628800));
}

TEST(Factorial, MatchesSchoolbookOracle) {
  for (unsigned n : {0u, 5u, 20u, 21u, 34u, 60u, 100u, 159u, 160u, 161u, 250u}) {
    EXPECT_EQ(jmb::factorial(n).to_string(), oracle::factorial_str(n)) << n;
  }
}

TEST(Factorial, CapIsEnforced) {
  EXPECT_NO_THROW(jmb::factorial(jmb::kFactorialCap));
  EXPECT_THROW(jmb::factorial(jmb::kFactorialCap + 1), jmb::ResourceError);
}

TEST(Power, Basics) {
  EXPECT_EQ(jmb::power(Nat(60), 0), Nat(1));
  EXPECT_EQ(jmb::power(Nat(0), 0), Nat(1));
  EXPECT_EQ(jmb::power(Nat(0), 3), Nat(0));
  EXPECT_EQ(jmb::power(Nat(2520), 2), Nat(6350400));
}

TEST(Power, MatchesSchoolbookOracle) {
  EXPECT_EQ(jmb::power(Nat(6531840), 5).to_string(), oracle::power_str(6531840, 5));
  EXPECT_EQ(jmb::power(Nat(60), 34).to_string(), oracle::power_str(60, 34));
  EXPECT_EQ(jmb::power(Nat(2520), 23).to_string(), oracle::power_str(2520, 23));
}

TEST(Nat, ParseAndPrint) {
  const std::string big = oracle::factorial_str(70);
  EXPECT_EQ(Nat::parse(big).to_string(), big);
  EXPECT_EQ(Nat::parse(big).decimal_digits(), big.size());
  EXPECT_THROW(Nat::parse(""), jmb::ParseError);
  EXPECT_THROW(Nat::parse("12a"), jmb::ParseError);
  EXPECT_THROW(Nat::parse("-4"), jmb::ParseError);
  EXPECT_TRUE(Nat(7).fits_u64());
  EXPECT_FALSE(jmb::factorial(30).fits_u64());
  EXPECT_THROW(jmb::factorial(30).to_u64(), jmb::DomainError);
}

TEST(CompareWithFactorial, SmallAndHuge) {
  EXPECT_EQ(jmb::compare_with_factorial(Nat(120), 5), std::strong_ordering::equal);
  EXPECT_EQ(jmb::compare_with_factorial(Nat(119), 5), std::strong_ordering::less);
  EXPECT_EQ(jmb::compare_with_factorial(jmb::factorial(300), 20000), std::strong_ordering::less);
  EXPECT_EQ(jmb::compare_with_factorial(Nat(1), 0), std::strong_ordering::equal);
}

TEST(SciString, PrintedApproximations) {
  const Nat f33 = jmb::power(Nat(6531840), 5) * Nat(120) * Nat(216);
  EXPECT_EQ(jmb::sci_string(f33).str(), "3.08e38");
  EXPECT_EQ(jmb::sci_string(jmb::factorial(34)).str(), "2.95e38");
  EXPECT_EQ(jmb::sci_string(Nat(1)).str(), "1.00e0");
  EXPECT_EQ(jmb::sci_string(jmb::power(Nat(2520), 6) * Nat(720)).str(), "1.84e23");
}

TEST(SciString, RoundingCarries) {
  EXPECT_EQ(jmb::sci_string(Nat(9995)).str(), "1.00e4");
  EXPECT_EQ(jmb::sci_string(Nat(9994)).str(), "9.99e3");
  EXPECT_EQ(jmb::sci_string(Nat(12), 1).str(), "1e1");
  EXPECT_EQ(jmb::sci_string(Nat(15), 1).str(), "2e1");
  EXPECT_EQ(jmb::sci_string(Nat(123456), 5).str(), "1.2346e5");
  EXPECT_THROW(jmb::sci_string(Nat(0)), jmb::DomainError);
}

TEST(Alpha, KnownValues) {
  const Nat f = jmb::power(Nat(2520), 6) * jmb::factorial(6);
  EXPECT_NEAR(jmb::alpha_exponent(f, 18), 3.8873, 0.001);
  for (unsigned n : {2u, 10u, 63u}) {
    EXPECT_NEAR(jmb::alpha_exponent(jmb::factorial(n + 2), n), 0.0, 0.001);
    EXPECT_NEAR(jmb::alpha_exponent(jmb::power(Nat(n), 4) * jmb::factorial(n + 2), n), 4.0, 0.001);
  }
  EXPECT_THROW(jmb::alpha_exponent(Nat(5), 1), jmb::DomainError);
}

TEST(LogNat, HugeValues) {
  const Nat x = jmb::factorial(5000);
  EXPECT_NEAR(jmb::log_nat(x), std::lgamma(5001.0), 1e-6 * std::lgamma(5001.0));
}
