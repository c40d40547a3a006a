#include "eschenburg/exact_arith.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <utility>

namespace eschenburg {

namespace checked {

i128 add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("128-bit addition overflow");
  return r;
}

i128 sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("128-bit subtraction overflow");
  return r;
}

i128 mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("128-bit multiplication overflow");
  return r;
}

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw Overflow("value does not fit in 64 bits: " + to_string(v));
  return static_cast<i64>(v);
}

}  // namespace checked

i128 gcd(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 gcd(i64 a, i64 b) {
  // Binary gcd on magnitudes; the enumerator calls this in its inner loop.
  std::uint64_t u = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  std::uint64_t v = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  if (u == 0) return checked::narrow(v);
  if (v == 0) return checked::narrow(u);
  const int shift = __builtin_ctzll(u | v);
  u >>= __builtin_ctzll(u);
  do {
    v >>= __builtin_ctzll(v);
    if (u > v) std::swap(u, v);
    v -= u;
  } while (v != 0);
  return checked::narrow(static_cast<i128>(u << shift));
}

i128 floor_mod(i128 x, i128 m) {
  i128 r = x % m;
  return r < 0 ? r + m : r;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Work with negative values so the minimum is representable.
  std::string out;
  i128 t = neg ? v : -v;
  while (t != 0) {
    int digit = static_cast<int>(-(t % 10));
    out.push_back(static_cast<char>('0' + digit));
    t /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

ResidueClass symmetric_rep(i128 x, i64 m) {
  if (m < 1) throw InvalidInput("modulus must be positive");
  i128 r = floor_mod(x, m);
  // r in [0, m); move into (-m/2, m/2].
  if (2 * r > m) r -= m;
  return ResidueClass{static_cast<i64>(r), m};
}

i64 ResidueClass::nonnegative() const { return value < 0 ? value + modulus : value; }

ResidueClass ResidueClass::operator-() const { return symmetric_rep(-static_cast<i128>(value), modulus); }

ResidueClass ResidueClass::operator+(const ResidueClass& rhs) const {
  if (rhs.modulus != modulus) throw InvalidInput("residue classes with different moduli");
  return symmetric_rep(static_cast<i128>(value) + rhs.value, modulus);
}

ResidueClass ResidueClass::operator*(const ResidueClass& rhs) const {
  if (rhs.modulus != modulus) throw InvalidInput("residue classes with different moduli");
  return symmetric_rep(static_cast<i128>(value) * rhs.value, modulus);
}

ResidueClass mod_inverse(const ResidueClass& x) {
  // Extended Euclid on (value mod m, m).
  i128 m = x.modulus;
  i128 a = floor_mod(x.value, m);
  i128 old_r = a, r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1 && m != 1)
    throw NotAUnit(std::to_string(x.value) + " is not a unit modulo " + std::to_string(x.modulus));
  return symmetric_rep(old_s, x.modulus);
}

RationalModZ reduce_mod_z(i128 num, i128 den) {
  if (den == 0) throw ZeroDenominator("zero denominator");
  if (den < 0) {
    num = checked::sub(0, num);
    den = checked::sub(0, den);
  }
  i128 g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  i128 r = floor_mod(num, den);
  if (2 * r > den) r -= den;
  if (r == 0) den = 1;
  return RationalModZ{checked::narrow(r), checked::narrow(den)};
}

std::strong_ordering operator<=>(const RationalModZ& a, const RationalModZ& b) {
  i128 lhs = static_cast<i128>(a.num) * b.den;
  i128 rhs = static_cast<i128>(b.num) * a.den;
  return lhs <=> rhs;
}

RationalModZ RationalModZ::operator-() const { return reduce_mod_z(-static_cast<i128>(num), den); }

RationalModZ RationalModZ::operator+(const RationalModZ& rhs) const {
  i128 g = gcd(static_cast<i128>(den), static_cast<i128>(rhs.den));
  i128 l = checked::mul(den / g, rhs.den);
  i128 n = checked::add(checked::mul(num, l / den), checked::mul(rhs.num, l / rhs.den));
  return reduce_mod_z(n, l);
}

std::string RationalModZ::str() const {
  if (num == 0) return "0";
  return std::to_string(num) + "/" + std::to_string(den);
}

RationalModZ parse_rational_mod_z(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      (void)std::stoll(text, &used);
      if (used != text.size()) throw InvalidInput("bad rational: " + text);
      return RationalModZ{0, 1};
    }
    std::string n = text.substr(0, slash), d = text.substr(slash + 1);
    i64 num = std::stoll(n, &used);
    if (used != n.size()) throw InvalidInput("bad rational: " + text);
    i64 den = std::stoll(d, &used);
    if (used != d.size()) throw InvalidInput("bad rational: " + text);
    return reduce_mod_z(num, den);
  } catch (const std::logic_error&) {
    throw InvalidInput("bad rational: " + text);
  }
}

std::ostream& operator<<(std::ostream& os, const ResidueClass& x) {
  return os << x.value << " mod " << x.modulus;
}

std::ostream& operator<<(std::ostream& os, const RationalModZ& x) { return os << x.str(); }

i64 isqrt(i64 n) {
  if (n < 0) throw InvalidInput("isqrt of a negative number");
  if (n < 2) return n;
  // Newton iteration from above; converges monotonically to floor(sqrt(n)).
  i128 x = n;
  i128 y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return static_cast<i64>(x);
}

namespace {

bool is_square(i64 n, i64& root) {
  root = isqrt(n);
  return root * root == n;
}

// Largest b with m = b^2 + c^2, b >= c >= 0, b <= cap.
bool two_squares(i64 m, i64 cap, i64& b, i64& c) {
  i64 hi = std::min(isqrt(m), cap);
  i64 lo = 0;
  // Two-pointer walk: hi descends, lo ascends.
  while (lo <= hi) {
    i128 s = static_cast<i128>(hi) * hi + static_cast<i128>(lo) * lo;
    if (s == m) {
      b = hi;
      c = lo;
      return true;
    }
    if (s > m)
      --hi;
    else
      ++lo;
  }
  return false;
}

// Legendre: m is a sum of three squares iff m is not 4^a (8b + 7).
bool three_square_possible(i64 m) {
  if (m == 0) return true;
  while (m % 4 == 0) m /= 4;
  return m % 8 != 7;
}

bool three_squares(i64 m, i64 cap, std::array<i64, 3>& out) {
  if (!three_square_possible(m)) return false;
  for (i64 a = std::min(isqrt(m), cap); a >= 0; --a) {
    i64 rest = m - a * a;
    i64 b = 0, c = 0;
    if (two_squares(rest, a, b, c)) {
      out = {a, b, c};
      return true;
    }
    // a must stay the largest entry; once 3a^2 < m no ordered solution remains.
    if (3 * static_cast<i128>(a) * a < m) break;
  }
  return false;
}

}  // namespace

FourSquare four_square(i64 n) {
  if (n < 0) throw InvalidInput("four_square of a negative number");
  FourSquare out;
  if (n == 0) return out;
  i64 root = 0;
  if (is_square(n, root)) {
    out.a = {root, 0, 0, 0};
    return out;
  }
  i64 b = 0, c = 0;
  if (two_squares(n, n, b, c)) {
    out.a = {b, c, 0, 0};
    return out;
  }
  std::array<i64, 3> t{};
  if (three_squares(n, n, t)) {
    out.a = {t[0], t[1], t[2], 0};
    return out;
  }
  for (i64 a = isqrt(n); a >= 0; --a) {
    i64 rest = n - a * a;
    if (three_squares(rest, a, t)) {
      out.a = {a, t[0], t[1], t[2]};
      return out;
    }
  }
  throw std::logic_error("four_square: no decomposition found");
}

}  // namespace eschenburg
