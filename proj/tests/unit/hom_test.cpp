#include <gtest/gtest.h>

#include "../support.hpp"
#include "locale_lab/hom.hpp"

using namespace locale_lab;
using namespace locale_lab::testing;

TEST(Hom, CountsMatchOracle) {
  for (auto& [key, count] : oracle()["homs"].items()) {
    auto sep = key.find("->");
    Frame L = data_frame(key.substr(0, sep)), M = data_frame(key.substr(sep + 2));
    auto homs = enumerate_homs(L, M);
    EXPECT_EQ(homs.size(), count.get<std::size_t>()) << key;
    for (const auto& h : homs) EXPECT_TRUE(is_frame_hom(L, M, h.map)) << key;
  }
}

TEST(Hom, OrderIsPointwise) {
  Frame C3 = data_frame("C3"), two = data_frame("two");
  auto homs = enumerate_homs(C3, two);
  ASSERT_EQ(homs.size(), 2u);
  EXPECT_TRUE(hom_leq(homs[0], homs[0]));
  EXPECT_NE(hom_leq(homs[0], homs[1]), hom_leq(homs[1], homs[0]));
}

TEST(Hom, RejectsNonHom) {
  Frame C3 = data_frame("C3"), two = data_frame("two");
  std::vector<Elem> constant(C3.size(), two.top());
  EXPECT_FALSE(is_frame_hom(C3, two, constant));
}
