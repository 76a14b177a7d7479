#include "ckit/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ckit/linalg.hpp"
#include "ckit/polymod.hpp"

namespace ckit {

// ---------------------------------------------------------------- IntPoly

IntPoly IntPoly::monomial(std::size_t k, const Int& a) {
  std::vector<Int> c(k + 1);
  c[k] = a;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> r = c_;
  for (auto& x : r) x = -x;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Int& s) const {
  std::vector<Int> r = c_;
  for (auto& x : r) x *= s;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r{1}, b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool IntPoly::operator<(const IntPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (long i = degree(); i >= 0; --i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

Int IntPoly::eval(const Int& x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
  return r;
}

IntPoly IntPoly::derivative() const {
  std::vector<Int> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(r));
}

Int IntPoly::content() const {
  Int g = 0;
  for (auto& x : c_) g = gcd(g, x);
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  Int g = content();
  if (lead() < 0) g = -g;
  std::vector<Int> r = c_;
  for (auto& x : r) x /= g;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::inflate(unsigned k) const {
  if (is_zero()) return {};
  std::vector<Int> r(static_cast<std::size_t>(degree()) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
  return IntPoly(std::move(r));
}

std::optional<IntPoly> IntPoly::exact_div(const IntPoly& d) const {
  CKIT_ASSERT(!d.is_zero(), "exact_div by zero");
  if (is_zero()) return IntPoly{};
  if (degree() < d.degree()) return std::nullopt;
  std::vector<Int> r = c_;
  std::vector<Int> q(static_cast<std::size_t>(degree() - d.degree() + 1));
  const long dd = d.degree();
  for (long i = degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), d.lead().get_mpz_t())) return std::nullopt;
    Int f = r[i] / d.lead();
    q[i - dd] = f;
    for (long j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
  }
  for (long i = 0; i < dd; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int a = abs(c_[i]);
    if (first) {
      if (c_[i] < 0) os << "-";
    } else {
      os << (c_[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(const IntPoly& p) {
  for (auto& x : p.coeffs()) c_.emplace_back(x);
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x = -x;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const Rat& s) const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x *= s;
  return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  CKIT_ASSERT(!d.is_zero(), "RatPoly division by zero");
  if (degree() < d.degree()) return {RatPoly{}, *this};
  std::vector<Rat> r = c_;
  std::vector<Rat> q(static_cast<std::size_t>(degree() - d.degree() + 1));
  const long dd = d.degree();
  for (long i = degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    Rat f = r[i] / d.lead();
    q[i - dd] = f;
    for (long j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
  }
  r.resize(static_cast<std::size_t>(dd));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / lead());
}

Rat RatPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

RatPoly RatPoly::derivative() const {
  std::vector<Rat> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<unsigned long>(i));
  return RatPoly(std::move(r));
}

IntPoly RatPoly::to_primitive() const {
  std::vector<Int> v = primitive_integer(c_);
  return IntPoly(std::move(v)).primitive();
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  return gcd(RatPoly(a), RatPoly(b)).to_primitive();
}

// ---------------------------------------------------------------- normalization

IntPoly normalize_alexander(const IntPoly& p) {
  if (p.is_zero()) throw InputError("zero Alexander polynomial");
  std::size_t k = 0;
  while (p.coeffs()[k] == 0) ++k;
  std::vector<Int> c(p.coeffs().begin() + static_cast<long>(k), p.coeffs().end());
  if (c[0] < 0)
    for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly normalize_alexander(const LaurentPoly& p) { return normalize_alexander(IntPoly(p.coeffs)); }

bool is_symmetric(const IntPoly& p) {
  CKIT_ASSERT(!p.is_zero(), "is_symmetric(0)");
  IntPoly r = p.reversed();
  return r == p || r == -p;
}

// ---------------------------------------------------------------- factorization

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& p) {
  CKIT_ASSERT(p.degree() >= 1, "squarefree_decomposition of a constant");
  std::vector<std::pair<IntPoly, unsigned>> out;
  RatPoly f(p.primitive());
  RatPoly c = gcd(f, f.derivative());
  RatPoly w = f.divmod(c).first;
  RatPoly y = f.derivative().divmod(c).first;
  RatPoly z = y - w.derivative();
  unsigned i = 1;
  // Yun's algorithm.
  while (w.degree() > 0) {
    RatPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g.to_primitive(), i);
    w = w.divmod(g).first;
    y = z.divmod(g).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

namespace {

// Largest |coefficient|.
Int height(const IntPoly& f) {
  Int h = 0;
  for (auto& c : f.coeffs())
    if (abs(c) > h) h = abs(c);
  return h;
}

std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const long n = f.degree();
  if (n <= 1) return {f};
  const Int lc = f.lead();

  // Monic transform F(x) = lc^{n-1} f(x / lc).
  std::vector<Int> fc(static_cast<std::size_t>(n + 1));
  fc[n] = 1;
  for (long i = 0; i < n; ++i) fc[i] = f.coeff(static_cast<std::size_t>(i)) * pow_int(lc, static_cast<unsigned long>(n - 1 - i));
  IntPoly F(fc);

  // Choose the good prime with the fewest modular factors among a few candidates.
  std::int64_t best_p = 0;
  std::vector<std::pair<modp::ModPoly, unsigned>> best;
  int tried = 0;
  for (std::int64_t p = 3; tried < 6 && p < 2000; p += 2) {
    if (!is_prime(Int(p))) continue;
    modp::ModPoly fp = modp::reduce(F, p);
    if (modp::degree(fp) != n || !modp::is_squarefree(fp, p)) continue;
    auto fac = modp::factor(fp, p);
    ++tried;
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  CKIT_ASSERT(best_p != 0, "no good prime for factorization");
  if (best.size() == 1) return {f};

  // Factor-coefficient bound: 2^n (n+1) |F|_inf bounds every monic factor of F.
  Int bound = pow_int(Int(2), static_cast<unsigned long>(n)) * (n + 1) * height(F);
  const Int p(best_p);
  unsigned k = 1;
  Int pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }
  std::vector<IntPoly> mods;
  for (auto& [g, e] : best) mods.push_back(modp::lift(g));
  std::vector<IntPoly> lifted = hensel::lift(hensel::reduce(F, pk), mods, p, k);

  std::vector<IntPoly> found;
  std::vector<IntPoly> remaining = lifted;
  IntPoly G = F;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    std::vector<std::size_t> idx(s);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) -> bool {
      if (depth == s) {
        IntPoly prod{1};
        for (auto i : idx) prod = hensel::reduce(prod * remaining[i], pk);
        IntPoly cand = hensel::symmetric(prod, pk);
        auto q = G.exact_div(cand);
        if (!q) return false;
        found.push_back(cand);
        G = *q;
        std::vector<IntPoly> rest;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(remaining[i]);
        remaining = std::move(rest);
        return true;
      }
      for (std::size_t i = start; i < remaining.size(); ++i) {
        idx[depth] = i;
        if (rec(i + 1, depth + 1)) return true;
      }
      return false;
    };
    while (2 * s <= remaining.size() && rec(0, 0)) {
    }
    ++s;
  }
  found.push_back(G);

  // Undo the monic transform: g(x) = primitive(G(lc x)).
  std::vector<IntPoly> out;
  for (auto& g : found) {
    std::vector<Int> c = g.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= pow_int(lc, static_cast<unsigned long>(i));
    out.push_back(IntPoly(c).primitive());
  }
  return out;
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& p) {
  CKIT_ASSERT(p.degree() >= 1, "factor_squarefree of a constant");
  IntPoly f = p.primitive();
  std::vector<IntPoly> out;
  // Pull out the factor x first so the constant term is nonzero.
  if (f.coeff(0) == 0) {
    out.push_back(IntPoly{0, 1});
    f = *f.exact_div(IntPoly{0, 1});
    if (f.degree() == 0) return out;
  }
  for (auto& g : zassenhaus(f)) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

SymmetricFactorization factor_rational(const IntPoly& p) {
  CKIT_ASSERT(!p.is_zero(), "factor_rational(0)");
  SymmetricFactorization r;
  r.unit = p.lead() < 0 ? -1 : 1;
  r.content = p.content();
  IntPoly f = p.primitive();
  while (f.coeff(0) == 0) {
    f = *f.exact_div(IntPoly{0, 1});
    ++r.t_power;
  }
  if (f.degree() >= 1) {
    std::map<IntPoly, unsigned> exps;
    for (auto& [part, mult] : squarefree_decomposition(f))
      for (auto& g : factor_squarefree(part)) exps[g] += mult;
    for (auto& [g, e] : exps) r.factors.push_back({g, e, is_symmetric(g), std::nullopt});
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
      if (r.factors[i].symmetric) continue;
      IntPoly rev = r.factors[i].poly.reversed().primitive();
      for (std::size_t j = 0; j < r.factors.size(); ++j)
        if (r.factors[j].poly == rev) r.factors[i].partner = j;
    }
  }
  CKIT_ASSERT(r.expand() == p, "factorization does not reproduce its input");
  return r;
}

IntPoly SymmetricFactorization::expand() const {
  IntPoly r = IntPoly::monomial(static_cast<std::size_t>(t_power), content * unit);
  for (auto& f : factors) r = r * f.poly.pow(f.exponent);
  return r;
}

const SymmetricFactor* SymmetricFactorization::find(const IntPoly& f) const {
  IntPoly g = f.primitive();
  for (auto& x : factors)
    if (x.poly == g) return &x;
  return nullptr;
}

bool fox_milnor_form(const IntPoly& p) {
  SymmetricFactorization fz = factor_rational(p);
  for (auto& f : fz.factors) {
    if (f.symmetric) {
      if (f.exponent % 2 != 0) return false;
    } else {
      if (!f.partner || fz.factors[*f.partner].exponent != f.exponent) return false;
    }
  }
  return true;
}

long min_concordant_degree(const IntPoly& p, const std::vector<IntPoly>& obstructed) {
  SymmetricFactorization fz = factor_rational(p);
  std::vector<IntPoly> obs;
  for (auto& d : obstructed) {
    const SymmetricFactor* f = fz.find(d);
    if (!f) throw InputError("obstructed factor " + d.str() + " does not divide " + p.str());
    obs.push_back(f->poly);
  }
  long total = 0;
  for (auto& f : fz.factors) {
    if (!f.symmetric) continue;
    long e = 0;
    if (f.exponent % 2 == 1)
      e = 1;
    else if (std::find(obs.begin(), obs.end(), f.poly) != obs.end())
      e = 2;
    total += e * f.poly.degree();
  }
  return total;
}

// ---------------------------------------------------------------- resultants

Int resultant(const IntPoly& p, const IntPoly& q) {
  CKIT_ASSERT(!p.is_zero() && !q.is_zero(), "resultant of zero polynomial");
  const std::size_t m = static_cast<std::size_t>(p.degree());
  const std::size_t n = static_cast<std::size_t>(q.degree());
  IntMatrix s(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s(i, i + j) = p.coeff(m - j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(n + i, i + j) = q.coeff(n - j);
  return det(s);
}

Int discriminant(const IntPoly& p) {
  CKIT_ASSERT(p.degree() >= 1, "discriminant of a constant");
  const long d = p.degree();
  Int r = resultant(p, p.derivative());
  CKIT_ASSERT(mpz_divisible_p(r.get_mpz_t(), p.lead().get_mpz_t()), "discriminant not integral");
  r /= p.lead();
  return (d * (d - 1) / 2) % 2 == 0 ? r : Int(-r);
}

IntPoly cyclotomic(unsigned n) {
  CKIT_ASSERT(n >= 1, "cyclotomic(0)");
  IntPoly f = IntPoly::monomial(n) - IntPoly{1};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) f = *f.exact_div(cyclotomic(d));
  return f;
}

namespace {

// Newton interpolation through (i, values[i]), i = 0..n.
RatPoly interpolate(const std::vector<Rat>& values) {
  const std::size_t n = values.size();
  std::vector<Rat> dd = values;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(j));
  RatPoly r(std::vector<Rat>{dd[n - 1]});
  for (std::size_t k = n - 1; k-- > 0;) {
    r = r * RatPoly(std::vector<Rat>{Rat(-static_cast<long>(k)), Rat(1)}) +
        RatPoly(std::vector<Rat>{dd[k]});
  }
  return r;
}

}  // namespace

IntPoly norm_np(const IntPoly& f, unsigned prime) {
  CKIT_ASSERT(prime >= 2, "norm_np: prime < 2");
  CKIT_ASSERT(!f.is_zero(), "norm_np of zero");
  const long n = f.degree();
  if (n == 0) return IntPoly::constant(pow_int(f.lead(), prime));
  // prod_i f(zeta^i x) = c^n (-1)^n res_x(f, x^p - t), c = -1 for p = 2.
  const int sign = ((prime == 2 ? n : 0) + n) % 2 == 0 ? 1 : -1;
  std::vector<Rat> vals;
  for (long t = 0; t <= n; ++t) {
    IntPoly g = IntPoly::monomial(prime) - IntPoly::constant(Int(t));
    vals.emplace_back(resultant(f, g) * sign);
  }
  RatPoly r = interpolate(vals);
  std::vector<Int> c;
  for (auto& x : r.coeffs()) {
    CKIT_ASSERT(x.get_den() == 1, "norm_np: non-integral coefficient");
    c.push_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

IntPoly trace_polynomial(const IntPoly& p) {
  if (p.is_zero() || p.degree() % 2 != 0 || p.reversed() != p)
    throw InputError("trace polynomial needs a palindromic polynomial of even degree");
  const long m = p.degree() / 2;
  // a[j + m] is the coefficient of t^j, j in [-m, m].
  std::vector<Int> a = p.coeffs();
  std::vector<Int> h(static_cast<std::size_t>(m + 1));
  for (long j = m; j >= 0; --j) {
    Int c = a[j + m];
    h[j] = c;
    if (c == 0) continue;
    // Subtract c (t + 1/t)^j.
    Int binom = 1;
    for (long i = 0; i <= j; ++i) {
      a[(j - 2 * i) + m] -= c * binom;
      binom = binom * (j - i) / (i + 1);
    }
  }
  for (auto& x : a) CKIT_ASSERT(x == 0, "trace_polynomial: residue not zero");
  return IntPoly(std::move(h));
}

// ---------------------------------------------------------------- real roots

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RatPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

long variations(const std::vector<RatPoly>& chain, const Rat& x) {
  long v = 0;
  int prev = 0;
  for (auto& q : chain) {
    int s = sgn(q.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

long count_roots(const RatPoly& p, const Rat& a, const Rat& b) {
  CKIT_ASSERT(!p.is_zero(), "count_roots of zero");
  if (p.degree() == 0 || a >= b) return 0;
  auto chain = sturm_chain(p);
  return variations(chain, a) - variations(chain, b);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const RatPoly& p, const Rat& lo, const Rat& hi,
                                                    const Rat& width) {
  std::vector<std::pair<Rat, Rat>> out;
  if (p.degree() <= 0 || lo >= hi) return out;
  auto chain = sturm_chain(p);
  std::function<void(const Rat&, const Rat&, long, long)> rec = [&](const Rat& a, const Rat& b, long va,
                                                                     long vb) {
    long n = va - vb;
    if (n == 0) return;
    if (n == 1 && b - a <= width) {
      out.emplace_back(a, b);
      return;
    }
    Rat mid = (a + b) / 2;
    long vm = variations(chain, mid);
    rec(a, mid, va, vm);
    rec(mid, b, vm, vb);
  };
  Rat top = hi;
  rec(lo, top, variations(chain, lo), variations(chain, top));
  if (!out.empty() && out.back().second == hi && p.eval(hi) == 0) out.pop_back();
  return out;
}

// ---------------------------------------------------------------- matrices

RatPoly char_poly(const RatMatrix& m) {
  CKIT_ASSERT(m.square(), "char_poly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rat> vals;
  for (std::size_t x = 0; x <= n; ++x) {
    RatMatrix a = -m;
    for (std::size_t i = 0; i < n; ++i) a(i, i) += Rat(static_cast<long>(x));
    vals.push_back(det(a));
  }
  return interpolate(vals);
}

RatMatrix eval_matrix(const IntPoly& p, const RatMatrix& m) {
  CKIT_ASSERT(m.square(), "eval_matrix of non-square matrix");
  RatMatrix r(m.rows(), m.cols());
  for (long i = p.degree(); i >= 0; --i) {
    r = r * m;
    for (std::size_t k = 0; k < m.rows(); ++k) r(k, k) += Rat(p.coeff(static_cast<std::size_t>(i)));
  }
  return r;
}

}  // namespace ckit
