#include <algorithm>

#include "eschenburg/classifier.hpp"

namespace eschenburg {

namespace {

// Smallest k1 >= k2 with r(k1, k2, l1, l2) >= rmin. r is increasing in k1 on
// the normal-form region, so the quadratic root is only a starting guess.
i64 first_k1(i64 k2, i64 l1, i64 l2, i64 rmin) {
  if (r_closed_form(k2, k2, l1, l2) >= rmin) return k2;
  const i128 b = static_cast<i128>(k2) - (l1 + l2);
  const i128 c = static_cast<i128>(k2) * k2 - static_cast<i128>(k2) * (l1 + l2) + static_cast<i128>(l1) * l2 - rmin;
  const i128 disc = b * b - 4 * c;
  i64 k1 = k2;
  if (disc >= 0) {
    const i64 root = isqrt(checked::narrow(disc));
    k1 = std::max<i64>(k2, static_cast<i64>((-b + root) / 2));
  }
  while (k1 > k2 && r_closed_form(k1 - 1, k2, l1, l2) >= rmin) --k1;
  while (r_closed_form(k1, k2, l1, l2) < rmin) ++k1;
  return k1;
}

}  // namespace

void enumerate_parameter_vectors(i64 rmax, const std::function<void(const ParameterVector&, i64 r)>& emit,
                                 i64 rmin) {
  if (rmax < 1) throw InvalidInput("rmax must be positive");
  if (rmin < 1) rmin = 1;
  // Minimum of r over l1 >= l2 with k1 = k2 = l1 + 1 is 2 l2 + 3.
  for (i64 l2 = 0; 2 * l2 + 3 <= rmax; ++l2) {
    for (i64 l1 = l2;; ++l1) {
      // r at k1 = k2 = l1 + 1; increasing in l1.
      if (r_closed_form(l1 + 1, l1 + 1, l1, l2) > rmax) break;
      for (i64 k2 = l1 + 1;; ++k2) {
        if (r_closed_form(k2, k2, l1, l2) > rmax) break;
        for (i64 k1 = first_k1(k2, l1, l2, rmin);; ++k1) {
          const i128 r = r_closed_form(k1, k2, l1, l2);
          if (r > rmax) break;
          const ParameterVector pv = make_vector(k1, k2, l1 + l2 - k1 - k2, l1, l2, 0);
          if (is_free_action(pv)) emit(pv, static_cast<i64>(r));
        }
      }
    }
  }
}

std::vector<ParameterVector> enumerate_parameter_vectors(i64 rmax, i64 rmin) {
  std::vector<ParameterVector> out;
  enumerate_parameter_vectors(rmax, [&](const ParameterVector& pv, i64) { out.push_back(pv); }, rmin);
  return out;
}

}  // namespace eschenburg
