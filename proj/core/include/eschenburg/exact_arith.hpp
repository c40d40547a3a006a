#pragma once

// Exact residue-class and Q/Z arithmetic. Everything here is integer-only;
// intermediate products are carried in 128 bits and every operation that could
// leave that range checks for it and throws Overflow instead of wrapping.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "eschenburg/errors.hpp"

namespace eschenburg {

using i64 = std::int64_t;
using i128 = __int128;

namespace checked {

i128 add(i128 a, i128 b);
i128 sub(i128 a, i128 b);
i128 mul(i128 a, i128 b);
i64 narrow(i128 v);

}  // namespace checked

i128 gcd(i128 a, i128 b);
i64 gcd(i64 a, i64 b);

/// Floor-mod into [0, m).
i128 floor_mod(i128 x, i128 m);

std::string to_string(i128 v);

/// Element of Z/m held as its symmetric representative in (-m/2, m/2].
struct ResidueClass {
  i64 value = 0;
  i64 modulus = 1;

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

  ResidueClass operator-() const;
  ResidueClass operator+(const ResidueClass& rhs) const;
  ResidueClass operator*(const ResidueClass& rhs) const;

  /// Representative in [0, modulus).
  i64 nonnegative() const;
};

ResidueClass symmetric_rep(i128 x, i64 m);

/// Inverse of a unit; throws NotAUnit when gcd(value, modulus) != 1.
ResidueClass mod_inverse(const ResidueClass& x);

/// Element of Q/Z, reduced, with representative in (-1/2, 1/2].
struct RationalModZ {
  i64 num = 0;
  i64 den = 1;

  friend bool operator==(const RationalModZ&, const RationalModZ&) = default;

  /// Orders by the value of num/den; used for deterministic canonical keys.
  friend std::strong_ordering operator<=>(const RationalModZ& a, const RationalModZ& b);

  RationalModZ operator-() const;
  RationalModZ operator+(const RationalModZ& rhs) const;

  std::string str() const;  // "num/den", or "0" for the zero class
};

RationalModZ reduce_mod_z(i128 num, i128 den);

/// Parses "num/den" or an integer; the result is reduced mod Z.
RationalModZ parse_rational_mod_z(const std::string& text);

std::ostream& operator<<(std::ostream& os, const ResidueClass& x);
std::ostream& operator<<(std::ostream& os, const RationalModZ& x);

/// a1 >= a2 >= a3 >= a4 >= 0 with a1^2 + a2^2 + a3^2 + a4^2 = n.
struct FourSquare {
  std::array<i64, 4> a{};

  friend bool operator==(const FourSquare&, const FourSquare&) = default;
};

/// Lagrange decomposition. Uses the fewest nonzero squares and, among those,
/// the lexicographically largest tuple, so the result is canonical.
FourSquare four_square(i64 n);

/// Integer square root, floor(sqrt(n)) for n >= 0.
i64 isqrt(i64 n);

}  // namespace eschenburg
