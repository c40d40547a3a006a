#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "eschenburg/exact_arith.hpp"

using namespace eschenburg;

TEST(SymmetricRep, Examples) {
  EXPECT_EQ(symmetric_rep(-280, 43).value, 21);
  EXPECT_EQ(symmetric_rep(0, 1).value, 0);
  EXPECT_EQ(symmetric_rep(22, 43).value, -21);
  EXPECT_EQ(symmetric_rep(-21, 43).value, -21);
  EXPECT_EQ(symmetric_rep(2, 4).value, 2);
  EXPECT_EQ(symmetric_rep(-2, 4).value, 2);
}

TEST(SymmetricRep, CongruentAndInRange) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100000; ++i) {
    const i64 m = 1 + static_cast<i64>(rng() % 100000);
    const i64 x = static_cast<i64>(rng() % 2000000001) - 1000000000;
    const ResidueClass c = symmetric_rep(x, m);
    EXPECT_EQ(floor_mod(static_cast<i128>(c.value) - x, m), 0);
    EXPECT_GT(2 * c.value, -m);
    EXPECT_LE(2 * c.value, m);
    EXPECT_EQ(c.nonnegative(), floor_mod(x, m));
  }
}

TEST(ModInverse, Examples) {
  EXPECT_EQ(mod_inverse(symmetric_rep(-21, 43)).value, 2);
  EXPECT_EQ(mod_inverse(symmetric_rep(1, 17)).value, 1);
  EXPECT_THROW(mod_inverse(symmetric_rep(3, 9)), NotAUnit);
  EXPECT_THROW(mod_inverse(symmetric_rep(0, 5)), InvalidInput);
}

TEST(ModInverse, Involution) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20000; ++i) {
    const i64 m = 2 + static_cast<i64>(rng() % 1000000);
    const ResidueClass x = symmetric_rep(static_cast<i64>(rng() % 1000000000), m);
    if (gcd(static_cast<i128>(x.value), static_cast<i128>(m)) != 1) {
      EXPECT_THROW(mod_inverse(x), NotAUnit);
      continue;
    }
    const ResidueClass y = mod_inverse(x);
    EXPECT_EQ((x * y).nonnegative(), 1 % m);
    EXPECT_EQ(mod_inverse(y), x);
  }
}

TEST(ReduceModZ, Examples) {
  EXPECT_EQ(reduce_mod_z(-5074, 516), (RationalModZ{1, 6}));
  EXPECT_EQ(reduce_mod_z(7, 1), (RationalModZ{0, 1}));
  EXPECT_EQ(reduce_mod_z(1, 2), (RationalModZ{1, 2}));
  EXPECT_EQ(reduce_mod_z(-1, 2), (RationalModZ{1, 2}));
  EXPECT_EQ(reduce_mod_z(1, -7), (RationalModZ{-1, 7}));
  EXPECT_THROW(reduce_mod_z(1, 0), ZeroDenominator);
  EXPECT_EQ(reduce_mod_z(0, 5).str(), "0");
  EXPECT_EQ(reduce_mod_z(-59, 516).str(), "-59/516");
}

TEST(ReduceModZ, IdempotentAndAdditiveInverse) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100000; ++i) {
    const i64 den = static_cast<i64>(rng() % 2000001) - 1000000;
    if (den == 0) continue;
    const i64 num = static_cast<i64>(rng() % 2000000001) - 1000000000;
    const RationalModZ a = reduce_mod_z(num, den);
    EXPECT_EQ(reduce_mod_z(a.num, a.den), a);
    EXPECT_GT(a.den, 0);
    EXPECT_EQ(gcd(static_cast<i128>(a.num), static_cast<i128>(a.den)), 1);
    EXPECT_GT(2 * static_cast<i128>(a.num), -static_cast<i128>(a.den));
    EXPECT_LE(2 * static_cast<i128>(a.num), static_cast<i128>(a.den));
    EXPECT_EQ(a + reduce_mod_z(-num, den), (RationalModZ{0, 1}));
    EXPECT_EQ(a + (-a), (RationalModZ{0, 1}));
  }
}

TEST(ReduceModZ, ParseRoundTrip) {
  for (const char* text : {"1/6", "-59/516", "0", "1/2", "-3247/8788"}) {
    EXPECT_EQ(parse_rational_mod_z(text).str(), text);
  }
  EXPECT_EQ(parse_rational_mod_z("5/6"), (RationalModZ{-1, 6}));
  EXPECT_THROW(parse_rational_mod_z("1/0"), ZeroDenominator);
  EXPECT_THROW(parse_rational_mod_z("abc"), InvalidInput);
}

TEST(Checked, OverflowThrows) {
  const i128 big = static_cast<i128>(1) << 126;
  EXPECT_THROW(checked::mul(big, 4), Overflow);
  EXPECT_THROW(checked::add(big, big), Overflow);
  EXPECT_THROW(checked::narrow(static_cast<i128>(1) << 70), Overflow);
  EXPECT_EQ(checked::mul(-3, 7), -21);
}

TEST(Gcd, MatchesStd) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100000; ++i) {
    const i64 a = static_cast<i64>(rng() % 2000001) - 1000000;
    const i64 b = static_cast<i64>(rng() % 2000001) - 1000000;
    EXPECT_EQ(gcd(a, b), std::gcd(a, b));
    EXPECT_EQ(gcd(static_cast<i128>(a), static_cast<i128>(b)), std::gcd(a, b));
  }
}

TEST(FourSquare, Examples) {
  EXPECT_EQ(four_square(0), (FourSquare{{0, 0, 0, 0}}));
  EXPECT_EQ(four_square(7), (FourSquare{{2, 1, 1, 1}}));
  EXPECT_EQ(four_square(43), (FourSquare{{5, 3, 3, 0}}));
  EXPECT_EQ(four_square(13), (FourSquare{{3, 2, 0, 0}}));
  EXPECT_EQ(four_square(16), (FourSquare{{4, 0, 0, 0}}));
}

TEST(FourSquare, ExactSumUpToOneMillion) {
  for (i64 n = 0; n <= 1000000; ++n) {
    const FourSquare f = four_square(n);
    i64 sum = 0;
    for (int i = 0; i < 4; ++i) {
      ASSERT_GE(f.a[i], 0);
      if (i > 0) ASSERT_GE(f.a[i - 1], f.a[i]);
      sum += f.a[i] * f.a[i];
    }
    ASSERT_EQ(sum, n) << n;
  }
}

// Fewest squares, then lexicographically largest, against exhaustive search.
TEST(FourSquare, CanonicalAgainstExhaustive) {
  for (i64 n = 0; n <= 3000; ++n) {
    FourSquare best;
    int best_count = 5;
    for (i64 a = 0; a * a <= n; ++a)
      for (i64 b = 0; b <= a && a * a + b * b <= n; ++b)
        for (i64 c = 0; c <= b && a * a + b * b + c * c <= n; ++c) {
          const i64 rest = n - a * a - b * b - c * c;
          const i64 d = isqrt(rest);
          if (d * d != rest || d > c) continue;
          const FourSquare cand{{a, b, c, d}};
          const int count = (a > 0) + (b > 0) + (c > 0) + (d > 0);
          if (count < best_count || (count == best_count && cand.a > best.a)) {
            best = cand;
            best_count = count;
          }
        }
    ASSERT_EQ(four_square(n), best) << n;
  }
}

TEST(Isqrt, Floor) {
  for (i64 n : {0LL, 1LL, 2LL, 3LL, 4LL, 99LL, 100LL, 101LL, 999999999999LL, 1000000000000LL, 9223372036854775807LL}) {
    const i128 s = isqrt(n);
    EXPECT_LE(s * s, n);
    EXPECT_GT((s + 1) * (s + 1), n);
  }
}
