#include "eschenburg/kreck_stolz.hpp"

#include <algorithm>

#include "eschenburg/defect.hpp"

namespace eschenburg {

namespace {

// Element of Q/Z with 128-bit parts, kept reduced with numerator in [0, den).
struct Frac {
  i128 num = 0;
  i128 den = 1;

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    num = floor_mod(num, den);
  }

  Frac& operator+=(Frac o) {
    i128 g = gcd(den, o.den);
    i128 l = checked::mul(den / g, o.den);
    num = checked::add(checked::mul(num, l / den), checked::mul(o.num, l / o.den));
    den = l;
    normalize();
    return *this;
  }
};

Frac frac(i128 num, i128 den) {
  if (den == 0) throw ZeroDenominator("zero denominator in Kreck-Stolz term");
  Frac f{num, den};
  f.normalize();
  return f;
}

int sign(i64 x) { return x > 0 ? 1 : -1; }

bool column_applies(const std::array<i64, 3>& k, const std::array<i64, 3>& l, int p) {
  i64 a[3];
  for (int i = 0; i < 3; ++i) {
    a[i] = k[i] - l[p];
    if (a[i] == 0) return false;
  }
  return gcd(a[0], a[1]) == 1 && gcd(a[1], a[2]) == 1 && gcd(a[0], a[2]) == 1;
}

// s2 of M(k,l) computed from the projection onto the column l_p.
Frac column_s2(const std::array<i64, 3>& k, const std::array<i64, 3>& l, int p) {
  const int q = (p + 1) % 3;
  i128 a[3], b[3];
  for (int i = 0; i < 3; ++i) {
    a[i] = static_cast<i128>(k[i]) - l[p];
    b[i] = static_cast<i128>(k[i]) - l[q];
  }
  const i128 c = static_cast<i128>(l[p]) - l[q];
  const i128 e1b = b[0] + b[1] + b[2];
  const i128 e2b = checked::add(checked::add(checked::mul(b[0], b[1]), checked::mul(b[1], b[2])), checked::mul(b[0], b[2]));
  const i128 c2e = checked::add(checked::sub(e2b, checked::mul(c, e1b)), checked::mul(c, c));
  const i128 prod = checked::mul(checked::mul(a[0], a[1]), a[2]);
  i128 pont = checked::mul(c, -c);
  for (int i = 0; i < 3; ++i) pont = checked::add(pont, checked::add(checked::mul(a[i], a[i]), checked::mul(b[i], b[i])));

  Frac total = frac(checked::sub(2, pont), checked::mul(checked::mul(48, c2e), prod));

  for (int i = 0; i < 3; ++i) {
    const i64 n = static_cast<i64>(a[i] < 0 ? -a[i] : a[i]);
    if (n == 1) continue;
    const int sg = sign(static_cast<i64>(a[i]));
    DefectInput in;
    in.n = n;
    in.ell = sg;
    int m = 0;
    for (int j = 0; j < 3; ++j)
      if (j != i) in.w[m++] = checked::narrow(sg * a[j]);
    for (int j = 0; j < 3; ++j)
      if (j != i) in.w[m++] = checked::narrow(sg * b[j]);
    i128 wsum = 0;
    for (i64 x : in.w) wsum += x;
    if (wsum % 2 != 0) throw std::logic_error("odd weight sum in defect term");
    in.shift = checked::narrow(wsum / 2);
    const i128 x = defect_numerator(in);
    const i128 n4 = checked::mul(checked::mul(n, n), checked::mul(n, n));
    total += frac(sg * x, n4);
  }
  return frac(-total.num, total.den);
}

RationalModZ to_rational(const Frac& f) { return reduce_mod_z(f.num, f.den); }

// Work for a route is linear in the orders of its singular points.
i128 route_cost(const ParameterVector& pv, Route route) {
  i128 cost = 0;
  for (int i = 0; i < 3; ++i) {
    const i128 w = route.row ? static_cast<i128>(pv.k[route.p]) - pv.l[i] : static_cast<i128>(pv.k[i]) - pv.l[route.p];
    const i128 n = w < 0 ? -w : w;
    if (n > 1) cost += n;
  }
  return cost;
}

}  // namespace

std::vector<Route> applicable_routes(const ParameterVector& pv) {
  std::vector<Route> out;
  const std::array<i64, 3> rk{-pv.l[0], -pv.l[1], -pv.l[2]};
  const std::array<i64, 3> rl{-pv.k[0], -pv.k[1], -pv.k[2]};
  for (int p = 0; p < 3; ++p)
    if (column_applies(pv.k, pv.l, p)) out.push_back(Route{false, p});
  for (int p = 0; p < 3; ++p)
    if (column_applies(rk, rl, p)) out.push_back(Route{true, p});
  std::stable_sort(out.begin(), out.end(),
                   [&](const Route& a, const Route& b) { return route_cost(pv, a) < route_cost(pv, b); });
  return out;
}

bool condition_c(const ParameterVector& pv) {
  if (elementary_symmetric(pv.k, 1) != elementary_symmetric(pv.l, 1)) return false;
  return !applicable_routes(pv).empty();
}

RationalModZ s2_along(const ParameterVector& pv, Route route) {
  if (!route.row) {
    if (!column_applies(pv.k, pv.l, route.p)) throw InvalidInput("route does not apply to " + pv.str());
    return to_rational(column_s2(pv.k, pv.l, route.p));
  }
  const std::array<i64, 3> rk{-pv.l[0], -pv.l[1], -pv.l[2]};
  const std::array<i64, 3> rl{-pv.k[0], -pv.k[1], -pv.k[2]};
  if (!column_applies(rk, rl, route.p)) throw InvalidInput("route does not apply to " + pv.str());
  return -to_rational(column_s2(rk, rl, route.p));
}

KreckStolzResult kreck_stolz(const ParameterVector& pv, bool cross_check) {
  KreckStolzResult res;
  if (!is_free_action(pv)) throw NotFree("action is not free for " + pv.str());
  const auto routes = applicable_routes(pv);
  if (routes.empty()) return res;
  const BasicInvariants inv = basic_invariants(pv);

  res.condition_c = true;
  const RationalModZ s2 = s2_along(pv, routes.front());
  if (cross_check && routes.size() > 1) {
    const RationalModZ other = s2_along(pv, routes[1]);
    if (other != s2)
      throw std::logic_error("Kreck-Stolz routes disagree for " + pv.str() + ": " + s2.str() + " vs " + other.str());
  }
  res.s2 = s2;
  res.s22 = reduce_mod_z(checked::mul(checked::mul(2, inv.r), s2.num), s2.den);
  return res;
}

}  // namespace eschenburg
