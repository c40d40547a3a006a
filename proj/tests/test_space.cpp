#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "eschenburg/space.hpp"
#include "table_data.hpp"

using namespace eschenburg;

TEST(ElementarySymmetric, Examples) {
  EXPECT_EQ(elementary_symmetric({8, 7, -5}, 2), -19);
  EXPECT_EQ(elementary_symmetric({6, 4, 0}, 3), 0);
  EXPECT_EQ(elementary_symmetric({58, 54, -34}, 1), 78);
  EXPECT_EQ(elementary_symmetric({2, 3, 5}, 3), 30);
}

TEST(StandardForm, Examples) {
  EXPECT_TRUE(satisfies_standard_form(make_vector(8, 7, -5, 6, 4, 0)));
  EXPECT_FALSE(satisfies_standard_form(make_vector(8, 7, -5, 6, 4, 1)));
  EXPECT_FALSE(satisfies_standard_form(make_vector(7, 8, -5, 6, 4, 0)));
  EXPECT_FALSE(satisfies_standard_form(make_vector(8, 7, -4, 6, 4, 0)));
  EXPECT_FALSE(satisfies_standard_form(make_vector(8, 6, -4, 6, 4, 0)));
}

TEST(Freeness, Examples) {
  EXPECT_TRUE(is_free_action(make_vector(8, 7, -5, 6, 4, 0)));
  EXPECT_TRUE(is_free_action(make_vector(35, 21, -34, 12, 10, 0)));
  EXPECT_FALSE(is_free_action(make_vector(2, 2, -4, 2, -2, 0)));
  EXPECT_FALSE(is_free_action(make_vector(1, 1, 1, 1, 1, 1)));
  EXPECT_FALSE(is_free_action(make_vector(8, 7, -4, 6, 4, 0)));
}

TEST(Freeness, AllTableRows) {
  for (const auto& row : tables::all_rows()) {
    EXPECT_TRUE(satisfies_standard_form(row.pv())) << row.pv().str();
    EXPECT_TRUE(is_free_action(row.pv())) << row.pv().str();
  }
}

// The symmetric form of the criterion, over both index pairs of l.
TEST(Freeness, SymmetricFormAgrees) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20000; ++t) {
    i64 v[5];
    for (auto& x : v) x = static_cast<i64>(rng() % 41) - 20;
    const ParameterVector pv = make_vector(v[0], v[1], v[3] + v[4] + 0 - v[0] - v[1], v[3], v[4], 0);
    bool sym = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            if (i != j && a != b && std::gcd(pv.k[i] - pv.l[a], pv.k[j] - pv.l[b]) != 1) sym = false;
    EXPECT_EQ(is_free_action(pv), sym) << pv.str();
  }
}

TEST(BasicInvariants, Examples) {
  auto a = basic_invariants(make_vector(8, 7, -5, 6, 4, 0));
  EXPECT_EQ(a.r, 43);
  EXPECT_EQ(a.s.value, -21);
  EXPECT_EQ(a.sigma.value, 1);
  EXPECT_EQ(a.p1.nonnegative(), 13);
  auto b = basic_invariants(make_vector(58, 54, -34, 39, 39, 0));
  EXPECT_EQ(b.r, 2197);
  EXPECT_EQ(b.s.value, 1032);
  EXPECT_EQ(b.sigma.value, 0);
  EXPECT_EQ(b.p1.nonnegative(), 845);
  auto c = basic_invariants(make_vector(2, 1, -3, 0, 0, 0));
  EXPECT_EQ(c.r, 7);
  EXPECT_EQ(c.s.value, -1);
  EXPECT_EQ(c.sigma.value, 0);
  EXPECT_EQ(c.p1.value, 0);
}

TEST(BasicInvariants, Errors) {
  EXPECT_THROW(basic_invariants(make_vector(1, 1, 1, 1, 1, 1)), DegenerateSpace);
  EXPECT_THROW(basic_invariants(make_vector(8, 7, -4, 6, 4, 0)), InvalidInput);
}

TEST(BasicInvariants, AllTableRows) {
  for (const auto& row : tables::all_rows()) {
    const auto inv = basic_invariants(row.pv());
    EXPECT_EQ(inv.r, row.r) << row.pv().str();
    EXPECT_EQ(inv.s.value, row.s) << row.pv().str();
    EXPECT_EQ(inv.sigma.value, row.sigma) << row.pv().str();
    EXPECT_EQ(inv.p1.nonnegative(), row.p1) << row.pv().str();
  }
}

TEST(ClosedForm, MatchesSigma2Difference) {
  for (const auto& row : tables::all_rows()) {
    const auto pv = row.pv();
    EXPECT_EQ(sigma2_difference(pv), -r_closed_form(pv.k[0], pv.k[1], pv.l[0], pv.l[1]));
  }
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10000; ++t) {
    const i64 l2 = static_cast<i64>(rng() % 1000), l1 = l2 + static_cast<i64>(rng() % 1000);
    const i64 k2 = l1 + 1 + static_cast<i64>(rng() % 1000), k1 = k2 + static_cast<i64>(rng() % 1000);
    const auto pv = make_vector(k1, k2, l1 + l2 - k1 - k2, l1, l2, 0);
    EXPECT_EQ(sigma2_difference(pv), -r_closed_form(k1, k2, l1, l2));
  }
}

TEST(LinkingNumber, Examples) {
  const auto inv = basic_invariants(make_vector(8, 7, -5, 6, 4, 0));
  EXPECT_EQ(linking_number(inv, -43), (RationalModZ{2, 43}));
  BasicInvariants unit{7, symmetric_rep(1, 7), symmetric_rep(0, 3), symmetric_rep(0, 7)};
  EXPECT_EQ(linking_number(unit, -7), (RationalModZ{1, 7}));
  BasicInvariants neg{7, symmetric_rep(-1, 7), symmetric_rep(0, 3), symmetric_rep(0, 7)};
  EXPECT_EQ(linking_number(neg, -7), (RationalModZ{-1, 7}));
  BasicInvariants bad{9, symmetric_rep(3, 9), symmetric_rep(0, 3), symmetric_rep(0, 9)};
  EXPECT_THROW(linking_number(bad, 9), NotAUnit);
}

namespace {
OrientedTuple tuple(i64 r, i64 s, i64 sigma, std::optional<RationalModZ> s22) {
  return OrientedTuple{r, symmetric_rep(s, r), symmetric_rep(sigma, 3), s22, std::nullopt, symmetric_rep(5, r)};
}
}  // namespace

TEST(OrientationFlip, Examples) {
  const auto f = orientation_flip(tuple(43, -21, 1, RationalModZ{1, 6}));
  EXPECT_EQ(f.s.value, 21);
  EXPECT_EQ(f.sigma.value, -1);
  EXPECT_EQ(*f.s22, (RationalModZ{-1, 6}));
  EXPECT_EQ(f.p1.value, 5);
  const auto g = orientation_flip(tuple(2197, 1032, 0, RationalModZ{1, 2}));
  EXPECT_EQ(g.s.value, -1032);
  EXPECT_EQ(g.sigma.value, 0);
  EXPECT_EQ(*g.s22, (RationalModZ{1, 2}));
}

TEST(CanonicalSignForm, Examples) {
  const auto a = tuple(43, 21, 1, RationalModZ{1, 6});
  const auto b = tuple(43, -21, -1, RationalModZ{-1, 6});
  EXPECT_EQ(canonical_sign_form(a), b);
  EXPECT_EQ(canonical_sign_form(b), b);
  const auto c = tuple(43, 0, 0, RationalModZ{1, 2});
  EXPECT_EQ(canonical_sign_form(c), c);
}

TEST(CanonicalSignForm, FlipInvariantAndIdempotent) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20000; ++t) {
    const i64 r = 1 + 2 * static_cast<i64>(rng() % 500);
    std::optional<RationalModZ> s22;
    if (rng() % 3) s22 = reduce_mod_z(static_cast<i64>(rng() % 12), 12);
    auto x = tuple(r, static_cast<i64>(rng() % 1000), static_cast<i64>(rng() % 3), s22);
    if (rng() % 2) x.s2 = reduce_mod_z(static_cast<i64>(rng() % 1000), 12 * r);
    EXPECT_EQ(orientation_flip(orientation_flip(x)), x);
    const auto c = canonical_sign_form(x);
    EXPECT_EQ(canonical_sign_form(orientation_flip(x)), c);
    EXPECT_EQ(canonical_sign_form(c), c);
    EXPECT_NE(compare_oriented(c, orientation_flip(c)), std::strong_ordering::greater);
  }
}

TEST(ParseVector, Formats) {
  EXPECT_EQ(parse_vector("8 7 -5 6 4 0"), make_vector(8, 7, -5, 6, 4, 0));
  EXPECT_EQ(parse_vector("(8,7,-5,6,4,0)"), make_vector(8, 7, -5, 6, 4, 0));
  EXPECT_THROW(parse_vector("8 7 -5 6 4"), InvalidInput);
  EXPECT_THROW(parse_vector("8 7 -5 6 4 x"), InvalidInput);
  EXPECT_EQ(make_vector(8, 7, -5, 6, 4, 0).str(), "8 7 -5 6 4 0");
}
