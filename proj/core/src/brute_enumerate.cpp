#include <algorithm>

#include "eschenburg/classifier.hpp"

namespace eschenburg {

// Under the normal form k1*k2 - l1*l2 >= k1, and the other two terms of r are
// positive, so r > k1 >= k2 > l1 >= l2. The box [0, rmax]^4 therefore holds every
// vector with r <= rmax. Nothing here depends on the enumerator's cutoffs.
std::vector<ParameterVector> brute_force_vectors(i64 rmax) {
  std::vector<ParameterVector> out;
  for (i64 k1 = 0; k1 <= rmax; ++k1)
    for (i64 k2 = 0; k2 <= rmax; ++k2)
      for (i64 l1 = 0; l1 <= rmax; ++l1)
        for (i64 l2 = 0; l2 <= rmax; ++l2) {
          const ParameterVector pv = make_vector(k1, k2, l1 + l2 - k1 - k2, l1, l2, 0);
          if (!satisfies_standard_form(pv)) continue;
          const i128 d = sigma2_difference(pv);
          if (d == 0 || (d < 0 ? -d : d) > rmax) continue;
          if (!is_free_action(pv)) continue;
          out.push_back(pv);
        }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eschenburg
