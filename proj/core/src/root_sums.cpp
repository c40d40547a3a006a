#include <unordered_map>

#include "eschenburg/defect.hpp"

namespace eschenburg {

namespace detail {

using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 result = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : small) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are deterministic for every n < 2^64.
  for (u64 a : small) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 prime_one_mod(u64 n, u64 after) {
  constexpr u64 lo = u64{1} << 61;
  constexpr u64 hi = u64{1} << 62;
  u64 start = after < lo ? lo : after + 1;
  // First candidate c >= start with c = 1 mod n.
  u64 c = start + ((n + 1 - start % n) % n);
  for (; c < hi; c += n) {
    if (is_prime_u64(c)) return c;
  }
  throw Overflow("no prime = 1 mod " + std::to_string(n) + " below 2^62");
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root_of_unity(u64 n, u64 p) {
  if ((p - 1) % n != 0) throw std::logic_error("n does not divide p - 1");
  const auto factors = prime_factors(n);
  const u64 e = (p - 1) / n;
  for (u64 g = 2;; ++g) {
    u64 z = pow_mod(g, e, p);
    bool primitive = true;
    for (u64 q : factors) {
      if (pow_mod(z, n / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return z;
  }
}

}  // namespace detail

namespace {

using detail::u64;
using u128 = unsigned __int128;

// Montgomery arithmetic modulo an odd p < 2^62 with R = 2^64.
struct Montgomery {
  u64 p = 0;
  u64 pinv = 0;  // -p^{-1} mod 2^64
  u64 r2 = 0;    // R^2 mod p

  explicit Montgomery(u64 modulus) : p(modulus) {
    u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    pinv = 0 - inv;
    const u64 r1 = static_cast<u64>((static_cast<u128>(1) << 64) % p);
    r2 = static_cast<u64>(static_cast<u128>(r1) * r1 % p);
  }

  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * pinv;
    u64 u = static_cast<u64>((t + static_cast<u128>(m) * p) >> 64);
    return u >= p ? u - p : u;
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 to(u64 a) const { return mul(a % p, r2); }
  u64 from(u64 a) const { return reduce(a); }
};

struct Field {
  Montgomery mont;
  std::vector<u64> zeta_pow;    // zeta^e, Montgomery form
  std::vector<u64> zeta_minus;  // zeta^e - 1, Montgomery form
};

struct Context {
  std::vector<Field> f;
};

const Context& context_for(i64 n) {
  // Prime search and the power tables are the expensive part for small n, and
  // the same n recurs constantly during a search.
  thread_local std::unordered_map<i64, Context> cache;
  thread_local std::size_t cached_words = 0;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (cached_words > (std::size_t{1} << 23)) {
    cache.clear();
    cached_words = 0;
  }
  cached_words += 4 * static_cast<std::size_t>(n);
  Context ctx;
  u64 prev = 0;
  for (int k = 0; k < 2; ++k) {
    const u64 p = detail::prime_one_mod(static_cast<u64>(n), prev);
    prev = p;
    Field field{Montgomery(p), {}, {}};
    const Montgomery& m = field.mont;
    const u64 z = m.to(detail::primitive_root_of_unity(static_cast<u64>(n), p));
    const u64 one = m.to(1);
    field.zeta_pow.resize(static_cast<std::size_t>(n));
    field.zeta_minus.resize(static_cast<std::size_t>(n));
    u64 acc = one;
    for (i64 e = 0; e < n; ++e) {
      field.zeta_pow[static_cast<std::size_t>(e)] = acc;
      field.zeta_minus[static_cast<std::size_t>(e)] = acc >= one ? acc - one : acc + p - one;
      acc = m.mul(acc, z);
    }
    ctx.f.push_back(std::move(field));
  }
  return cache.emplace(n, std::move(ctx)).first->second;
}

// n^3 * sum_{t=1}^{n-1} num(t)/den(t) in F_p.
u64 scaled_sum(const Field& field, const DefectInput& in) {
  const Montgomery& m = field.mont;
  const u64 p = m.p;
  const i64 n = in.n;
  const u64* zp = field.zeta_pow.data();
  const u64* zm = field.zeta_minus.data();
  i64 w[4];
  for (int j = 0; j < 4; ++j) w[j] = static_cast<i64>(floor_mod(in.w[j], n));
  const i64 ell = static_cast<i64>(floor_mod(in.ell, n));
  const i64 shift = static_cast<i64>(floor_mod(in.shift, n));

  // Accumulate A/B as a single fraction so only one inversion is needed.
  u64 A = 0, B = m.to(1);
  i64 e0 = 0, e1 = 0, e2 = 0, e3 = 0, el = 0, es = 0;
  for (i64 t = 1; t < n; ++t) {
    e0 += w[0];
    if (e0 >= n) e0 -= n;
    e1 += w[1];
    if (e1 >= n) e1 -= n;
    e2 += w[2];
    if (e2 >= n) e2 -= n;
    e3 += w[3];
    if (e3 >= n) e3 -= n;
    el += ell;
    if (el >= n) el -= n;
    es += shift;
    if (es >= n) es -= n;
    const u64 num = m.mul(zm[el], zp[es]);
    const u64 den = m.mul(m.mul(zm[e0], zm[e1]), m.mul(zm[e2], zm[e3]));
    A = m.mul(A, den) + m.mul(num, B);
    if (A >= p) A -= p;
    B = m.mul(B, den);
  }
  const u64 a = m.from(A), b = m.from(B);
  if (b == 0) throw InvalidInput("defect weight is not a unit");
  const u64 n3 = detail::pow_mod(static_cast<u64>(n) % p, 3, p);
  return detail::mul_mod(detail::mul_mod(a, detail::pow_mod(b, p - 2, p), p), n3, p);
}

}  // namespace

i128 defect_bound(i64 n) {
  // |X| <= n^3 (n^2 - 1)(n^2 + 11) / 360 via Hoelder and the csc^4 sum.
  i128 nn = n;
  i128 v = checked::mul(checked::mul(checked::mul(nn, nn), nn), checked::mul(nn, nn) - 1);
  v = checked::mul(v, checked::mul(nn, nn) + 11);
  return v / 360 + 1;
}

i128 defect_numerator(const DefectInput& in) {
  if (in.n < 2) throw InvalidInput("defect order must be at least 2");
  for (i64 wj : in.w)
    if (gcd(wj, in.n) != 1) throw InvalidInput("defect weight is not a unit");
  const i128 bound = defect_bound(in.n);
  const Context& ctx = context_for(in.n);
  const u64 p1 = ctx.f[0].mont.p, p2 = ctx.f[1].mont.p;
  const i128 modulus = static_cast<i128>(p1) * static_cast<i128>(p2);
  if (bound > modulus / 2 - 1) throw Overflow("defect bound exceeds CRT range for n = " + std::to_string(in.n));

  const u64 x1 = scaled_sum(ctx.f[0], in);
  const u64 x2 = scaled_sum(ctx.f[1], in);
  // X = x1 + p1 * ((x2 - x1) * p1^{-1} mod p2)
  const u64 inv = detail::pow_mod(p1 % p2, p2 - 2, p2);
  const u64 diff = (x2 + p2 - x1 % p2) % p2;
  const u64 h = detail::mul_mod(diff, inv, p2);
  i128 x = static_cast<i128>(x1) + static_cast<i128>(p1) * static_cast<i128>(h);
  if (x > modulus / 2) x -= modulus;
  if (x > bound || x < -bound) throw std::logic_error("defect reconstruction outside certified bound");
  return x;
}

}  // namespace eschenburg
