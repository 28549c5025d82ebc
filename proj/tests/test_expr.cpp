#include <gtest/gtest.h>

#include "jmb/errors.hpp"
#include "jmb/expr.hpp"

using jmb::Catalog;
using jmb::Characteristic;
using jmb::Expr;
using jmb::Nat;

namespace {

Nat eval(const char* text, std::optional<unsigned> l = std::nullopt) {
  std::optional<Characteristic> ch;
  if (l) ch = Characteristic(*l);
  return Expr::parse(text).eval(Catalog::paper(), ch);
}

}  // namespace

TEST(ExprTest, Arithmetic) {
  EXPECT_EQ(eval("1+2*3"), Nat(7));
  EXPECT_EQ(eval("(1+2)*3"), Nat(9));
  EXPECT_EQ(eval("2^3^2"), Nat(512));
  EXPECT_EQ(eval("fact(5)"), Nat(120));
  EXPECT_EQ(eval("prod(16,21)"), Nat(16ull * 17 * 18 * 19 * 20 * 21));
  EXPECT_EQ(eval("prod(5,4)"), Nat(1));
  EXPECT_EQ(eval(" 60 ^ 2 "), Nat(3600));
}

TEST(ExprTest, CatalogFunctions) {
  EXPECT_EQ(eval("N(2,l)", 7), Nat(60));
  EXPECT_EQ(eval("N(9,5)"), Nat(12700800));
  EXPECT_EQ(eval("idx(3,l)", 5), Nat(2520));
  EXPECT_EQ(eval("idx(2,2)"), Nat(0));
  EXPECT_EQ(eval("idx(10,2)"), jmb::factorial(12));
  EXPECT_THROW(eval("idx(3,l)"), jmb::DomainError);
  EXPECT_THROW(eval("N(2,4)"), jmb::ValidationError);
  EXPECT_TRUE(Expr::parse("N(2,l)+1").uses_l());
  EXPECT_FALSE(Expr::parse("N(2,3)").uses_l());
}

TEST(ExprTest, ParseErrors) {
  for (const char* bad : {"", "1+", "(1", "fact(1,2)", "foo(3)", "1 2", "l l", "2^", "-1"}) {
    EXPECT_THROW(Expr::parse(bad), jmb::ParseError) << bad;
  }
}

TEST(ExprTest, HugeFactorialCompare) {
  const auto a = Expr::parse("fact(20000)");
  const auto b = Expr::parse("10^100");
  EXPECT_EQ(jmb::compare(a, b, Catalog::paper(), std::nullopt), std::strong_ordering::greater);
  EXPECT_EQ(jmb::compare(b, a, Catalog::paper(), std::nullopt), std::strong_ordering::less);
  EXPECT_THROW(a.eval(Catalog::paper()), jmb::ResourceError);
}

TEST(ChainTest, ParseAndHolds) {
  const auto c = jmb::Chain::parse("fact(59) < 2520^19*fact(19) < fact(60)");
  ASSERT_EQ(c.terms.size(), 3u);
  EXPECT_EQ(c.relations, (std::vector<jmb::Relation>{jmb::Relation::Less, jmb::Relation::Less}));
  const auto d = jmb::Chain::parse("1 <= 2 >= 0 = 0 > l");
  EXPECT_TRUE(d.uses_l());
  EXPECT_THROW(jmb::Chain::parse("3"), jmb::ParseError);
  EXPECT_THROW(jmb::Chain::parse("3 <"), jmb::ParseError);
  EXPECT_TRUE(jmb::holds(jmb::Relation::LessEq, std::strong_ordering::equal));
  EXPECT_FALSE(jmb::holds(jmb::Relation::Greater, std::strong_ordering::equal));
}
