#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "sigfrac/circulant.hpp"
#include "sigfrac/errors.hpp"
#include "sigfrac/sg_format.hpp"

namespace sigfrac {
namespace {

TEST(SgFormat, CanonicalSerialization) {
  auto g = build(4, {{2, 3}, {0, 1}}, {{0, 2}});
  EXPECT_EQ(to_sg(g), "sg 1\nn 4\n+ 0 1\n- 0 2\n+ 2 3\n");
}

TEST(SgFormat, ParsesAnyOrderWithComments) {
  auto g = parse_sg(
      "# a triangle\n"
      "sg 1\n"
      "\n"
      "n 3   # three vertices\n"
      "- 2 1\n"
      "+ 0 1\n"
      "- 0 2\n");
  EXPECT_EQ(g, build(3, {{0, 1}}, {{1, 2}, {0, 2}}));
}

TEST(SgFormat, RoundTripIsByteStable) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_graph(rng, static_cast<int>(rng() % 9));
    auto text = to_sg(g);
    EXPECT_EQ(parse_sg(text), g);
    EXPECT_EQ(to_sg(parse_sg(text)), text);
  }
}

TEST(SgFormat, Rejects) {
  for (const char* bad : {"", "sg 2\nn 3\n", "sg 1\n", "sg 1\nn x\n", "sg 1\nn 3\n* 0 1\n",
                          "sg 1\nn 3\n+ 0\n", "sg 1\nn 3\n+ 0 1 2\n", "sg 1\nn 3\n+ 0 3\n",
                          "sg 1\nn 3\n+ 0 1\n- 1 0\n", "sg 1\nn 3\n+ 1 1\n", "n 3\nsg 1\n"}) {
    try {
      parse_sg(std::string(bad));
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << bad;
    }
  }
}

}  // namespace
}  // namespace sigfrac
