#include <gtest/gtest.h>

#include "jmb/errors.hpp"
#include "jmb/shape.hpp"

using jmb::Characteristic;
using jmb::ShapeBlock;

TEST(ParseShape, Grammar) {
  EXPECT_EQ(jmb::parse_shape("P6^(5)+P3"),
            (std::vector<ShapeBlock>{{6, 5, std::nullopt}, {3, 1, std::nullopt}}));
  EXPECT_EQ(jmb::parse_shape("P64~S66+P1"),
            (std::vector<ShapeBlock>{{64, 1, 66u}, {1, 1, std::nullopt}}));
  EXPECT_EQ(jmb::parse_shape("P10^(3)~S12"), (std::vector<ShapeBlock>{{10, 3, 12u}}));
  for (const char* bad : {"", "P", "P0", "P3+", "+P3", "Q3", "P3^(0)", "P3^5", "P3^(2", "P3~T4", "P10~S12^(3)",
                          "P3 + P1", "P3^()"}) {
    EXPECT_THROW(jmb::parse_shape(bad), jmb::ParseError) << bad;
  }
}

TEST(FormatShape, CanonicalForm) {
  const auto p = jmb::pair_from_shape("P1+P64", Characteristic(3));
  EXPECT_EQ(p.shape(), "P64~S66+P1");
  EXPECT_EQ(jmb::format_shape(p), p.shape());
  EXPECT_EQ(jmb::pair_from_shape("P3^(4)", Characteristic(5)).shape(), "P3^(4)");
}

TEST(PairFromShape, AnnotationMustMatch) {
  EXPECT_NO_THROW(jmb::pair_from_shape("P71~S72", Characteristic(11)));
  EXPECT_THROW(jmb::pair_from_shape("P71~S73", Characteristic(11)), jmb::ValidationError);
  EXPECT_THROW(jmb::pair_from_shape("P4~S5", Characteristic(7)), jmb::ValidationError);
  EXPECT_THROW(jmb::pair_from_shape("P65", Characteristic(3)), jmb::ValidationError);
}
