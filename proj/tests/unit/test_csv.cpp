#include <limits>

#include <gtest/gtest.h>

#include "chargeshare/csv.hpp"

using namespace chargeshare;

TEST(Csv, NumberFormatting) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(1e-20), "1e-20");
}

TEST(Csv, QuotingAndColumns) {
  Table t{{"a", "b"}, {}};
  t.add({std::string("x,y"), 2.5});
  t.add({std::string("say \"hi\""), long{3}});
  EXPECT_EQ(to_csv(t), "a,b\n\"x,y\",2.5\n\"say \"\"hi\"\"\",3\n");
  EXPECT_EQ(t.column("b"), 1u);
  EXPECT_DOUBLE_EQ(t.number(1, "b"), 3.0);
  EXPECT_THROW(t.column("c"), std::out_of_range);
}
