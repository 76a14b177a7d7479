#include "ckit/polymod.hpp"

#include <algorithm>
#include <random>

namespace ckit::modp {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>(static_cast<i128>(a) * b % p); }

i64 powmod(i64 a, i64 e, i64 p) {
  i64 r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

ModPoly polmod(const ModPoly& a, const ModPoly& m, i64 p) { return divmod(a, m, p).second; }

ModPoly powmod_poly(ModPoly base, Int e, const ModPoly& m, i64 p) {
  ModPoly r{1};
  base = polmod(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = polmod(mul(r, base, p), m, p);
    base = polmod(mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

ModPoly derivative(const ModPoly& a, i64 p) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mulmod(a[i], static_cast<i64>(i % p), p));
  trim(d);
  return d;
}

// Squarefree monic f: list of (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, unsigned>> distinct_degree(ModPoly f, i64 p) {
  std::vector<std::pair<ModPoly, unsigned>> out;
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  unsigned d = 0;
  while (degree(f) >= 2 * static_cast<long>(d + 1)) {
    ++d;
    h = powmod_poly(h, Int(p), f, p);
    ModPoly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = polmod(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, static_cast<unsigned>(degree(f)));
  return out;
}

void equal_degree(const ModPoly& f, unsigned d, i64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (degree(f) == static_cast<long>(d)) {
    out.push_back(monic(f, p));
    return;
  }
  std::uniform_int_distribution<i64> coef(0, p - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (degree(a) < 1) continue;
    ModPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      ModPoly term = a;
      b = a;
      for (unsigned i = 1; i < d; ++i) {
        term = polmod(mul(term, term, p), f, p);
        b = add(b, term, p);
      }
    } else {
      Int e = (pow_int(Int(p), d) - 1) / 2;
      b = sub(powmod_poly(a, e, f, p), ModPoly{1}, p);
    }
    ModPoly g = gcd(f, b, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

// Yun-style squarefree factorization in characteristic p.
std::vector<std::pair<ModPoly, unsigned>> squarefree(const ModPoly& f_in, i64 p) {
  std::vector<std::pair<ModPoly, unsigned>> out;
  ModPoly f = monic(f_in, p);
  if (degree(f) <= 0) return out;
  ModPoly df = derivative(f, p);
  if (df.empty()) {
    // f = g(x^p) = g(x)^p over F_p.
    ModPoly g;
    for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(p)) g.push_back(f[i]);
    for (auto& [h, e] : squarefree(g, p)) out.emplace_back(h, e * static_cast<unsigned>(p));
    return out;
  }
  ModPoly c = gcd(f, df, p);
  ModPoly w = divmod(f, c, p).first;
  unsigned i = 1;
  while (degree(w) > 0) {
    ModPoly y = gcd(w, c, p);
    ModPoly z = divmod(w, y, p).first;
    if (degree(z) > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = divmod(c, y, p).first;
  }
  if (degree(c) > 0) {
    ModPoly g;
    for (std::size_t k = 0; k < c.size(); k += static_cast<std::size_t>(p)) g.push_back(c[k]);
    for (auto& [h, e] : squarefree(g, p)) out.emplace_back(h, e * static_cast<unsigned>(p));
  }
  return out;
}

}  // namespace

ModPoly reduce(const IntPoly& f, i64 p) {
  ModPoly r;
  for (auto& c : f.coeffs()) r.push_back(mod_small(c, p));
  trim(r);
  return r;
}

IntPoly lift(const ModPoly& f) {
  std::vector<Int> c;
  for (auto x : f) c.emplace_back(static_cast<long>(x));
  return IntPoly(c);
}

long degree(const ModPoly& f) { return static_cast<long>(f.size()) - 1; }

ModPoly add(const ModPoly& a, const ModPoly& b, i64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    i64 x = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = x % p;
  }
  trim(r);
  return r;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, i64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    i64 x = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    r[i] = ((x % p) + p) % p;
  }
  trim(r);
  return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b, i64 p) {
  CKIT_ASSERT(!b.empty(), "modp::divmod by zero");
  ModPoly r = a;
  trim(r);
  if (degree(r) < degree(b)) return {{}, r};
  ModPoly q(static_cast<std::size_t>(degree(r) - degree(b) + 1), 0);
  i64 inv = invmod(b.back(), p);
  while (degree(r) >= degree(b)) {
    std::size_t shift = static_cast<std::size_t>(degree(r) - degree(b));
    i64 f = mulmod(r.back(), inv, p);
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i)
      r[shift + i] = ((r[shift + i] - mulmod(f, b[i], p)) % p + p) % p;
    trim(r);
  }
  trim(q);
  return {q, r};
}

ModPoly monic(const ModPoly& a, i64 p) {
  if (a.empty()) return a;
  i64 inv = invmod(a.back(), p);
  ModPoly r = a;
  for (auto& c : r) c = mulmod(c, inv, p);
  return r;
}

ModPoly gcd(ModPoly a, ModPoly b, i64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

void ext_gcd(const ModPoly& a_in, const ModPoly& b_in, i64 p, ModPoly& g, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a_in, r1 = b_in, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  i64 inv = invmod(r0.back(), p);
  auto scale = [&](ModPoly v) {
    for (auto& c : v) c = mulmod(c, inv, p);
    trim(v);
    return v;
  };
  g = scale(r0);
  s = scale(s0);
  t = scale(t0);
}

std::vector<std::pair<ModPoly, unsigned>> factor(const ModPoly& f, i64 p) {
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(p));
  std::map<ModPoly, unsigned> acc;
  for (auto& [sq, mult] : squarefree(f, p)) {
    for (auto& [part, d] : distinct_degree(sq, p)) {
      std::vector<ModPoly> irr;
      equal_degree(part, d, p, rng, irr);
      for (auto& g : irr) acc[g] += mult;
    }
  }
  std::vector<std::pair<ModPoly, unsigned>> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

bool is_squarefree(const ModPoly& f, i64 p) {
  ModPoly d = derivative(f, p);
  if (d.empty()) return degree(f) <= 0;
  return degree(gcd(f, d, p)) == 0;
}

}  // namespace ckit::modp

namespace ckit::hensel {

IntPoly reduce(const IntPoly& f, const Int& m) {
  std::vector<Int> c;
  for (auto& x : f.coeffs()) c.push_back(ckit::mod(x, m));
  return IntPoly(c);
}

IntPoly symmetric(const IntPoly& f, const Int& m) {
  std::vector<Int> c;
  Int half = m / 2;
  for (auto& x : f.coeffs()) {
    Int r = ckit::mod(x, m);
    if (r > half) r -= m;
    c.push_back(r);
  }
  return IntPoly(c);
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b, const Int& m) {
  CKIT_ASSERT(!b.is_zero() && ckit::mod(b.lead() - 1, m) == 0, "divmod_monic: divisor not monic");
  std::vector<Int> r = reduce(a, m).coeffs();
  const long db = b.degree();
  std::vector<Int> q(r.size() > static_cast<std::size_t>(db) ? r.size() - db : 0);
  for (long i = static_cast<long>(r.size()) - 1; i >= db; --i) {
    Int f = ckit::mod(r[i], m);
    if (f == 0) continue;
    q[i - db] = f;
    for (long j = 0; j <= db; ++j) r[i - db + j] = ckit::mod(r[i - db + j] - f * b.coeff(j), m);
  }
  r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(db)));
  return {IntPoly(q), reduce(IntPoly(r), m)};
}

namespace {

IntPoly mulm(const IntPoly& a, const IntPoly& b, const Int& m) { return reduce(a * b, m); }

// One quadratic Hensel step: f = g h (mod m), s g + t h = 1 (mod m), h monic;
// returns the same relations modulo m^2.
void step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const Int& m) {
  const Int m2 = m * m;
  IntPoly e = reduce(f - g * h, m2);
  auto [q, r] = divmod_monic(s * e, h, m2);
  IntPoly g1 = reduce(g + t * e + q * g, m2);
  IntPoly h1 = reduce(h + r, m2);
  IntPoly b = reduce(s * g1 + t * h1 - IntPoly{1}, m2);
  auto [c, d] = divmod_monic(s * b, h1, m2);
  IntPoly s1 = reduce(s - d, m2);
  IntPoly t1 = reduce(t - t * b - c * g1, m2);
  g = g1;
  h = h1;
  s = s1;
  t = t1;
}

std::vector<IntPoly> lift_tree(const IntPoly& f, const std::vector<IntPoly>& fs, const Int& p,
                               unsigned k) {
  if (fs.size() == 1) return {reduce(f, pow_int(p, k))};
  const std::size_t half = fs.size() / 2;
  const long pl = p.get_si();
  IntPoly g{1}, h{1};
  for (std::size_t i = 0; i < half; ++i) g = mulm(g, fs[i], p);
  for (std::size_t i = half; i < fs.size(); ++i) h = mulm(h, fs[i], p);
  modp::ModPoly gg, ss, tt;
  modp::ext_gcd(modp::reduce(g, pl), modp::reduce(h, pl), pl, gg, ss, tt);
  CKIT_ASSERT(modp::degree(gg) == 0, "hensel: factors not coprime mod p");
  IntPoly s = modp::lift(ss), t = modp::lift(tt);
  Int m = p;
  unsigned reached = 1;
  while (reached < k) {
    step(f, g, h, s, t, m);
    m *= m;
    reached *= 2;
  }
  const Int target = pow_int(p, k);
  g = reduce(g, target);
  h = reduce(h, target);
  std::vector<IntPoly> left(fs.begin(), fs.begin() + half), right(fs.begin() + half, fs.end());
  auto a = lift_tree(g, left, p, k);
  auto b = lift_tree(h, right, p, k);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<IntPoly> lift(const IntPoly& f, const std::vector<IntPoly>& factors, const Int& p, unsigned k) {
  CKIT_ASSERT(!factors.empty(), "hensel::lift: no factors");
  CKIT_ASSERT(f.lead() == 1, "hensel::lift: f must be monic");
  return lift_tree(f, factors, p, k);
}

}  // namespace ckit::hensel
