#include <gtest/gtest.h>

#include "eschenburg/kreck_stolz.hpp"
#include "table_data.hpp"

using namespace eschenburg;

TEST(ConditionC, Verdicts) {
  EXPECT_FALSE(condition_c(make_vector(35, 21, -34, 12, 10, 0)));
  EXPECT_TRUE(condition_c(make_vector(8, 7, -5, 6, 4, 0)));
  EXPECT_FALSE(condition_c(make_vector(400, 168, -352, 165, 51, 0)));
  EXPECT_TRUE(condition_c(make_vector(440, 168, -320, 159, 129, 0)));
}

TEST(KreckStolz, AllTableRows) {
  for (const auto& row : tables::all_rows()) {
    const auto res = kreck_stolz(row.pv());
    ASSERT_EQ(res.condition_c, row.cond_c) << row.pv().str();
    if (!row.cond_c) {
      EXPECT_FALSE(res.s2.has_value());
      EXPECT_FALSE(res.s22.has_value());
      continue;
    }
    EXPECT_EQ(res.s22->str(), row.s22) << row.pv().str();
    EXPECT_EQ(res.s2->str(), row.s2) << row.pv().str();
  }
}

// s22 = 2 r s2 checked directly on the printed values.
TEST(KreckStolz, PrintedPairsSatisfyLaw) {
  int checked_pairs = 0;
  for (const auto& row : tables::all_rows()) {
    if (!row.cond_c) continue;
    const RationalModZ s2 = parse_rational_mod_z(row.s2);
    EXPECT_EQ(reduce_mod_z(2 * static_cast<i128>(row.r) * s2.num, s2.den), parse_rational_mod_z(row.s22))
        << row.pv().str();
    ++checked_pairs;
  }
  EXPECT_EQ(checked_pairs, 33);
}

TEST(KreckStolz, EveryRouteAgrees) {
  for (const auto& row : tables::all_rows()) {
    const auto routes = applicable_routes(row.pv());
    EXPECT_EQ(routes.empty(), !row.cond_c);
    for (const Route& route : routes) EXPECT_EQ(s2_along(row.pv(), route).str(), row.s2) << row.pv().str();
  }
}

TEST(KreckStolz, RoutesAgreeOnSmallSpaces) {
  int multi = 0;
  for (i64 l2 = 0; l2 <= 6; ++l2)
    for (i64 l1 = l2; l1 <= 10; ++l1)
      for (i64 k2 = l1 + 1; k2 <= 14; ++k2)
        for (i64 k1 = k2; k1 <= 18; ++k1) {
          const auto pv = make_vector(k1, k2, l1 + l2 - k1 - k2, l1, l2, 0);
          if (!is_free_action(pv)) continue;
          const auto routes = applicable_routes(pv);
          if (routes.size() < 2) continue;
          ++multi;
          const RationalModZ first = s2_along(pv, routes[0]);
          for (const Route& route : routes) ASSERT_EQ(s2_along(pv, route), first) << pv.str();
        }
  EXPECT_GT(multi, 100);
}

TEST(KreckStolz, NotFreeThrows) {
  EXPECT_THROW(kreck_stolz(make_vector(8, 7, -4, 6, 4, 0)), NotFree);
  EXPECT_THROW(kreck_stolz(make_vector(2, 2, -4, 2, -2, 0)), NotFree);
}

TEST(KreckStolz, RouteMustApply) {
  const auto pv = make_vector(35, 21, -34, 12, 10, 0);
  EXPECT_THROW(s2_along(pv, Route{false, 0}), InvalidInput);
}

TEST(KreckStolz, DenominatorDividesTwelveR) {
  for (i64 l2 = 0; l2 <= 8; ++l2)
    for (i64 l1 = l2; l1 <= 12; ++l1)
      for (i64 k2 = l1 + 1; k2 <= 16; ++k2)
        for (i64 k1 = k2; k1 <= 20; ++k1) {
          const auto pv = make_vector(k1, k2, l1 + l2 - k1 - k2, l1, l2, 0);
          if (!is_free_action(pv)) continue;
          const auto res = kreck_stolz(pv);
          if (!res.condition_c) continue;
          const i64 r = basic_invariants(pv).r;
          EXPECT_EQ((12 * r) % res.s2->den, 0) << pv.str();
          EXPECT_EQ(*res.s22, reduce_mod_z(2 * static_cast<i128>(r) * res.s2->num, res.s2->den));
        }
}
