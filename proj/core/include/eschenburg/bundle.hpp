#pragma once

#include <optional>
#include <vector>

#include "eschenburg/exact_arith.hpp"

namespace eschenburg {

/// Base space data. h4_order = 1 encodes H^4 = 0; h4_order = 0 (infinite) is
/// rejected by every operation.
struct BaseSpace {
  i64 dim = 7;
  i64 h4_order = 1;
  bool h2_cyclic = true;  // H^2 nonzero cyclic, H^4 cyclic generated by the square
  bool has_2torsion_h4 = false;
};

/// A BaseSpace whose 2-torsion flag follows the parity of s.
BaseSpace cyclic_base(i64 dim, i64 s);

/// Stable characteristic data of a real bundle over a BaseSpace.
///
/// q1 is the Spin class of F - r(L_b) where b = q1_twist; for Spin data the
/// twist is 0 and q1 is the Spin class of F itself.
struct BundleClassData {
  i64 rank = 0;
  int w1 = 0;
  int w2 = 0;
  std::optional<ResidueClass> p1;
  std::optional<ResidueClass> q1;
  i64 q1_twist = 0;

  friend bool operator==(const BundleClassData&, const BundleClassData&) = default;
};

struct LineBundleSum {
  std::vector<i64> degrees;

  friend bool operator==(const LineBundleSum&, const LineBundleSum&) = default;
};

int sigma4(i64 s);

i64 rank_threshold(const BaseSpace& space);

/// Classes of r(L_{a1} + ... + L_{ak}). q1 is filled when the degrees sum to
/// zero, and also when they sum to `twist` != 0, in which case it describes
/// the sum minus r(L_twist).
BundleClassData char_classes_of_line_sum(const LineBundleSum& sum, const BaseSpace& space, i64 twist = 0);

bool stably_equivalent(const BundleClassData& f, const BundleClassData& g, const BaseSpace& space);

/// Exactly sigma4(s) degrees whose realification is stably equivalent to f.
LineBundleSum decompose_to_line_bundles(const BundleClassData& f, const BaseSpace& space);

}  // namespace eschenburg
