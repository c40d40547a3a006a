#include "eschenburg/space.hpp"

#include <sstream>
#include <vector>

namespace eschenburg {

std::string ParameterVector::str() const {
  std::ostringstream os;
  os << k[0] << ' ' << k[1] << ' ' << k[2] << ' ' << l[0] << ' ' << l[1] << ' ' << l[2];
  return os.str();
}

ParameterVector make_vector(i64 k1, i64 k2, i64 k3, i64 l1, i64 l2, i64 l3) {
  return ParameterVector{{k1, k2, k3}, {l1, l2, l3}};
}

ParameterVector parse_vector(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',' || c == '(' || c == ')') c = ' ';
  std::istringstream is(cleaned);
  std::vector<i64> v;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      long long x = std::stoll(tok, &used);
      if (used != tok.size()) throw InvalidInput("not an integer: " + tok);
      v.push_back(x);
    } catch (const std::logic_error&) {
      throw InvalidInput("not an integer: " + tok);
    }
  }
  if (v.size() != 6) throw InvalidInput("expected six integers k1 k2 k3 l1 l2 l3");
  constexpr i64 kLimit = 1'000'000'000;
  for (i64 x : v)
    if (x > kLimit || x < -kLimit) throw InvalidInput("parameter out of range: " + std::to_string(x));
  return make_vector(v[0], v[1], v[2], v[3], v[4], v[5]);
}

i128 elementary_symmetric(const std::array<i64, 3>& t, int i) {
  const i128 a = t[0], b = t[1], c = t[2];
  switch (i) {
    case 1:
      return a + b + c;
    case 2:
      return a * b + b * c + a * c;
    case 3:
      return checked::mul(a * b, c);
    default:
      throw InvalidInput("elementary_symmetric: index must be 1, 2 or 3");
  }
}

bool satisfies_standard_form(const ParameterVector& pv) {
  const auto& k = pv.k;
  const auto& l = pv.l;
  return k[0] >= k[1] && k[1] > l[0] && l[0] >= l[1] && l[1] >= l[2] && l[2] == 0 &&
         elementary_symmetric(k, 1) == elementary_symmetric(l, 1);
}

bool is_free_action(const ParameterVector& pv) {
  if (elementary_symmetric(pv.k, 1) != elementary_symmetric(pv.l, 1)) return false;
  const auto& k = pv.k;
  const auto& l = pv.l;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      if (gcd(k[i] - l[0], k[j] - l[1]) != 1) return false;
    }
  return true;
}

i128 sigma2_difference(const ParameterVector& pv) {
  return elementary_symmetric(pv.k, 2) - elementary_symmetric(pv.l, 2);
}

BasicInvariants basic_invariants(const ParameterVector& pv) {
  const i128 s1k = elementary_symmetric(pv.k, 1);
  const i128 s1l = elementary_symmetric(pv.l, 1);
  if (s1k != s1l) throw InvalidInput("sigma1(k) != sigma1(l) for " + pv.str());
  i128 diff = sigma2_difference(pv);
  if (diff == 0) throw DegenerateSpace("r = 0 for " + pv.str());
  const i64 r = checked::narrow(diff < 0 ? -diff : diff);

  BasicInvariants inv;
  inv.r = r;
  inv.s = symmetric_rep(checked::sub(elementary_symmetric(pv.l, 3), elementary_symmetric(pv.k, 3)), r);
  inv.sigma = symmetric_rep(s1l, 3);
  if (symmetric_rep(s1k, 3) != inv.sigma) throw std::logic_error("sigma mismatch");
  const i128 p1 = checked::sub(checked::mul(2 * s1l, s1l), checked::mul(6, elementary_symmetric(pv.l, 2)));
  inv.p1 = symmetric_rep(p1, r);
  return inv;
}

RationalModZ linking_number(const BasicInvariants& inv, i128 sigma2_diff) {
  if (sigma2_diff == 0) throw ZeroDenominator("sigma2 difference is zero");
  const ResidueClass inverse = mod_inverse(inv.s);
  return reduce_mod_z(-static_cast<i128>(inverse.value), sigma2_diff);
}

OrientedTuple orientation_flip(const OrientedTuple& t) {
  OrientedTuple f = t;
  f.s = -t.s;
  f.sigma = -t.sigma;
  if (t.s22) f.s22 = -*t.s22;
  if (t.s2) f.s2 = -*t.s2;
  return f;
}

namespace {

template <class T>
std::strong_ordering compare_optional(const std::optional<T>& a, const std::optional<T>& b) {
  if (a.has_value() != b.has_value()) return a.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!a) return std::strong_ordering::equal;
  return *a <=> *b;
}

}  // namespace

std::strong_ordering compare_oriented(const OrientedTuple& a, const OrientedTuple& b) {
  if (auto c = a.s.value <=> b.s.value; c != 0) return c;
  if (auto c = a.sigma.value <=> b.sigma.value; c != 0) return c;
  if (auto c = compare_optional(a.s22, b.s22); c != 0) return c;
  return compare_optional(a.s2, b.s2);
}

OrientedTuple canonical_sign_form(const OrientedTuple& t) {
  OrientedTuple f = orientation_flip(t);
  return compare_oriented(f, t) < 0 ? f : t;
}

}  // namespace eschenburg
