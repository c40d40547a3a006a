#pragma once

#include <optional>
#include <vector>

#include "eschenburg/space.hpp"

namespace eschenburg {

struct KreckStolzResult {
  bool condition_c = false;
  std::optional<RationalModZ> s2;
  std::optional<RationalModZ> s22;

  friend bool operator==(const KreckStolzResult&, const KreckStolzResult&) = default;
};

/// One way of projecting the space onto a weighted projective plane. A column
/// route fixes l_p and uses weights k_i - l_p; a row route does the same for
/// the transposed vector (-l, -k).
struct Route {
  bool row = false;
  int p = 0;

  friend bool operator==(const Route&, const Route&) = default;
};

/// Routes whose three weights are nonzero and pairwise coprime, cheapest first.
std::vector<Route> applicable_routes(const ParameterVector& pv);

bool condition_c(const ParameterVector& pv);

/// s2 computed along a single applicable route.
RationalModZ s2_along(const ParameterVector& pv, Route route);

/// When `cross_check` is set and a second route applies, both are evaluated
/// and must agree (std::logic_error otherwise).
KreckStolzResult kreck_stolz(const ParameterVector& pv, bool cross_check = true);

}  // namespace eschenburg
