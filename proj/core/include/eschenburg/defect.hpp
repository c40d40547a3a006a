#pragma once

// Exact evaluation of the cyclic-quotient defect
//
//   def = (1/n) * sum over lambda^n = 1, lambda != 1 of
//         (lambda^ell - 1) * lambda^N / prod_j (lambda^{w_j} - 1)
//
// with n >= 2, ell = +-1, every w_j a unit mod n. n^4 * def is an integer; the
// functions below return that integer.

#include <array>
#include <cstdint>
#include <vector>

#include "eschenburg/exact_arith.hpp"

namespace eschenburg {

struct DefectInput {
  i64 n = 0;
  i64 ell = 1;
  i64 shift = 0;  // N
  std::array<i64, 4> w{};
};

/// Evaluates the sum in F_p for two primes p = 1 mod n and recombines the
/// residues. Throws Overflow when the a-priori bound exceeds the CRT range.
i128 defect_numerator(const DefectInput& in);

/// Upper bound on |n^4 * def| used to certify the CRT reconstruction.
i128 defect_bound(i64 n);

namespace detail {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p);
u64 pow_mod(u64 a, u64 e, u64 p);
bool is_prime_u64(u64 n);

/// Prime p in [2^61, 2^62) with p = 1 mod n, the smallest one above `after`.
u64 prime_one_mod(u64 n, u64 after);

/// Primitive n-th root of unity modulo prime p (requires n | p - 1).
u64 primitive_root_of_unity(u64 n, u64 p);

std::vector<u64> prime_factors(u64 n);

}  // namespace detail

}  // namespace eschenburg
