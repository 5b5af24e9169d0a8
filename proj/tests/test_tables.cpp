#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "pfaflab/tables.hpp"

using namespace pfaflab;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(PFAFLAB_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Tables, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("V[(1,2)]"), "\"V[(1,2)]\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_row({"a", "b,c"}), "a,\"b,c\"\n");
}

TEST(Tables, Golden) {
  EXPECT_EQ(table_uncrossing(), golden("uncrossing.csv"));
  EXPECT_EQ(table_diagram_pfaffinants(), golden("diagram-pfaffinants.csv"));
  EXPECT_EQ(table_tl_pfaffinants(), golden("tl-pfaffinants.csv"));
  EXPECT_EQ(table_transition(2), golden("transition-2.csv"));
  EXPECT_EQ(table_quadratic(), golden("quadratic.csv"));
}

TEST(Tables, Registry) {
  EXPECT_NE(find_table("uncrossing"), nullptr);
  EXPECT_EQ(find_table("ex-2.7"), find_table("diagram-pfaffinants"));
  EXPECT_EQ(find_table("nope"), nullptr);
}
