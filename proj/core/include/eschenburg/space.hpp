#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "eschenburg/exact_arith.hpp"

namespace eschenburg {

/// Six integers (k1,k2,k3,l1,l2,l3) defining M(k,l).
struct ParameterVector {
  std::array<i64, 3> k{};
  std::array<i64, 3> l{};

  friend auto operator<=>(const ParameterVector&, const ParameterVector&) = default;
  friend bool operator==(const ParameterVector&, const ParameterVector&) = default;

  std::array<i64, 6> flat() const { return {k[0], k[1], k[2], l[0], l[1], l[2]}; }
  std::string str() const;  // "k1 k2 k3 l1 l2 l3"
};

ParameterVector make_vector(i64 k1, i64 k2, i64 k3, i64 l1, i64 l2, i64 l3);

/// Parses six whitespace- or comma-separated integers.
ParameterVector parse_vector(const std::string& text);

struct BasicInvariants {
  i64 r = 0;
  ResidueClass s;
  ResidueClass sigma;
  ResidueClass p1;

  friend bool operator==(const BasicInvariants&, const BasicInvariants&) = default;
};

/// Invariants that change sign with the orientation (s, sigma, s22, s2), with
/// r and p1 carried alongside unchanged.
struct OrientedTuple {
  i64 r = 0;
  ResidueClass s;
  ResidueClass sigma;
  std::optional<RationalModZ> s22;
  std::optional<RationalModZ> s2;
  ResidueClass p1;

  friend bool operator==(const OrientedTuple&, const OrientedTuple&) = default;
};

/// Total order used by canonical_sign_form: s, sigma, s22, s2 (absent < present).
std::strong_ordering compare_oriented(const OrientedTuple& a, const OrientedTuple& b);

i128 elementary_symmetric(const std::array<i64, 3>& t, int i);

/// k1 >= k2 > l1 >= l2 >= l3 = 0 and sigma1(k) = sigma1(l).
bool satisfies_standard_form(const ParameterVector& pv);

/// gcd(k_t(1) - l1, k_t(2) - l2) = 1 for every permutation t. Vectors with
/// sigma1(k) != sigma1(l) are never free.
bool is_free_action(const ParameterVector& pv);

/// sigma2(k) - sigma2(l).
i128 sigma2_difference(const ParameterVector& pv);

/// Throws DegenerateSpace for r = 0 and InvalidInput when sigma1(k) != sigma1(l).
BasicInvariants basic_invariants(const ParameterVector& pv);

RationalModZ linking_number(const BasicInvariants& inv, i128 sigma2_diff);

OrientedTuple orientation_flip(const OrientedTuple& t);
OrientedTuple canonical_sign_form(const OrientedTuple& t);

/// Closed form of r under the normal form; used by the enumerator.
inline i128 r_closed_form(i128 k1, i128 k2, i128 l1, i128 l2) {
  return k1 * k1 + k1 * k2 + k2 * k2 - (k1 + k2) * (l1 + l2) + l1 * l2;
}

}  // namespace eschenburg
