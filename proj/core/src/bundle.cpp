#include "eschenburg/bundle.hpp"

#include <algorithm>

namespace eschenburg {

namespace {

void require_finite_h4(const BaseSpace& space) {
  if (space.h4_order < 1) throw HypothesesViolated("H^4 must be finite (order >= 1)");
}

void require_cyclic(const BaseSpace& space) {
  require_finite_h4(space);
  if (!space.h2_cyclic) throw HypothesesViolated("H^2 must be nonzero cyclic with H^4 generated by its square");
  if (space.dim < 1) throw HypothesesViolated("dimension must be positive");
}

i64 sum_of(const std::vector<i64>& v) {
  i128 s = 0;
  for (i64 x : v) s = checked::add(s, x);
  return checked::narrow(s);
}

i128 sum_of_squares(const std::vector<i64>& v) {
  i128 s = 0;
  for (i64 x : v) s = checked::add(s, checked::mul(x, x));
  return s;
}

ResidueClass p1_of(const BundleClassData& f, i64 s) {
  if (f.p1) return symmetric_rep(f.p1->value, s);
  if (f.q1) {
    const i128 b = f.q1_twist;
    return symmetric_rep(checked::add(2 * static_cast<i128>(f.q1->value), b * b), s);
  }
  throw InvalidInput("bundle data carries neither p1 nor q1");
}

}  // namespace

BaseSpace cyclic_base(i64 dim, i64 s) {
  BaseSpace b;
  b.dim = dim;
  b.h4_order = s;
  b.h2_cyclic = true;
  b.has_2torsion_h4 = s % 2 == 0;
  return b;
}

int sigma4(i64 s) {
  if (s < 1) throw HypothesesViolated("H^4 order must be at least 1");
  if (s == 1) return 1;
  return s % 2 == 1 ? 4 : 9;
}

i64 rank_threshold(const BaseSpace& space) {
  require_cyclic(space);
  return std::max<i64>(2 * sigma4(space.h4_order), space.dim + 1);
}

BundleClassData char_classes_of_line_sum(const LineBundleSum& sum, const BaseSpace& space, i64 twist) {
  require_finite_h4(space);
  const i64 s = space.h4_order;
  BundleClassData out;
  out.rank = 2 * static_cast<i64>(sum.degrees.size());
  out.w1 = 0;
  const i64 c1 = sum_of(sum.degrees);
  out.w2 = static_cast<int>(floor_mod(c1, 2));
  const i128 sq = sum_of_squares(sum.degrees);
  out.p1 = symmetric_rep(sq, s);
  if (c1 == twist) {
    // c1 of the virtual bundle E - L_b vanishes, so q1 = -c2 = (sum a^2 - b^2)/2.
    const i128 b = twist;
    out.q1 = symmetric_rep(checked::sub(sq, b * b) / 2, s);
    out.q1_twist = twist;
  }
  return out;
}

bool stably_equivalent(const BundleClassData& f, const BundleClassData& g, const BaseSpace& space) {
  require_finite_h4(space);
  if (space.dim > 7) throw CriterionUnavailable("stable classification needs dim <= 7");
  const i64 s = space.h4_order;
  if (f.q1 && g.q1 && f.q1_twist == g.q1_twist) {
    return f.w1 == g.w1 && f.w2 == g.w2 && symmetric_rep(f.q1->value, s) == symmetric_rep(g.q1->value, s);
  }
  if (!space.has_2torsion_h4) {
    return f.w1 == g.w1 && f.w2 == g.w2 && p1_of(f, s) == p1_of(g, s);
  }
  throw CriterionUnavailable("H^4 has 2-torsion and the data is not comparable through q1");
}

LineBundleSum decompose_to_line_bundles(const BundleClassData& f, const BaseSpace& space) {
  require_cyclic(space);
  if (f.w1 != 0) throw HypothesesViolated("a sum of complex line bundles is orientable (w1 must be 0)");
  if (f.w2 != 0 && f.w2 != 1) throw InvalidInput("w2 must be 0 or 1");
  const i64 s = space.h4_order;
  LineBundleSum out;

  if (s == 1) {
    out.degrees = {f.w2};
    return out;
  }

  if (s % 2 == 1) {
    const ResidueClass target = p1_of(f, s);
    FourSquare fs = four_square(target.nonnegative());
    out.degrees.assign(fs.a.begin(), fs.a.end());
    if (floor_mod(sum_of(out.degrees), 2) != f.w2) out.degrees[0] += s;  // (a+s)^2 = a^2 mod s
    return out;
  }

  if (!f.q1) throw HypothesesViolated("even H^4 order requires the Spin class q1 of F - r(L_b)");
  if (floor_mod(f.q1_twist, 2) != f.w2) throw HypothesesViolated("q1 twist b must satisfy b = w2 mod 2");
  FourSquare fs = four_square(symmetric_rep(f.q1->value, s).nonnegative());
  for (i64 a : fs.a) {
    out.degrees.push_back(a);
    out.degrees.push_back(-a);
  }
  out.degrees.push_back(f.q1_twist);
  return out;
}

}  // namespace eschenburg
