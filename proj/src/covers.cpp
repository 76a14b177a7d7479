#include "ckit/covers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "ckit/cyclotomic.hpp"
#include "ckit/linalg.hpp"

namespace ckit {

Int AbelianGroup::order() const {
  Int n = 1;
  for (auto& d : invariant_factors) n *= d;
  return n;
}

bool AbelianGroup::is_doubled() const {
  const auto& f = invariant_factors;
  if (f.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < f.size(); i += 2)
    if (f[i] != f[i + 1]) return false;
  return true;
}

std::string AbelianGroup::str() const {
  if (invariant_factors.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i)
    os << (i ? " + " : "") << "Z/" << invariant_factors[i].get_str();
  return os.str();
}

namespace {

void require_prime(unsigned p) {
  if (p < 2 || !is_prime(Int(p))) throw InputError("cover degree must be prime, got " + std::to_string(p));
}

}  // namespace

Int cover_order(const IntPoly& d, unsigned p) {
  require_prime(p);
  if (d.is_zero()) throw InputError("zero Alexander polynomial");
  Int r = abs(resultant(d, cyclotomic(p)));
  if (r == 0) throw InputError("Alexander polynomial vanishes at a " + std::to_string(p) + "-th root of unity");
  return r;
}

AbelianGroup cover_homology(const SeifertMatrix& s, unsigned p) {
  require_prime(p);
  const std::size_t n = s.size();
  const std::size_t blocks = p - 1;
  const IntMatrix& v = s.V;
  const IntMatrix vt = v.transpose();
  const IntMatrix diag = v + vt;
  IntMatrix m(n * blocks, n * blocks);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(b * n + i, b * n + j) = diag(i, j);
        if (b + 1 < blocks) {
          m(b * n + i, (b + 1) * n + j) = -v(i, j);
          m((b + 1) * n + i, b * n + j) = -vt(i, j);
        }
      }
  AbelianGroup g;
  for (auto& d : smith_invariants(m)) {
    Int a = abs(d);
    if (a == 0) throw InputError("infinite homology: Alexander polynomial vanishes at a " + std::to_string(p) +
                                 "-th root of unity");
    if (a != 1) g.invariant_factors.push_back(a);
  }
  return g;
}

bool Character2::nontrivial() const {
  return std::any_of(values.begin(), values.end(), [](int x) { return x != 0; });
}

std::string Character2::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ")";
  return os.str();
}

bool CharacterSearchReport::ok() const {
  return subgroups_of_order > 0 && subgroups_of_order == subgroups_of_order_formula && counterexamples == 0 &&
         case_failures == 0;
}

namespace {

Int gaussian_binomial(long n, long k, const Int& p) {
  if (k < 0 || k > n) return 0;
  Int num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= pow_int(p, static_cast<unsigned long>(n - i)) - 1;
    den *= pow_int(p, static_cast<unsigned long>(i + 1)) - 1;
  }
  return num / den;
}

std::vector<long> conjugate(const std::vector<unsigned>& part) {
  std::vector<long> c;
  if (part.empty()) return c;
  const unsigned top = *std::max_element(part.begin(), part.end());
  for (unsigned i = 1; i <= top; ++i)
    c.push_back(std::count_if(part.begin(), part.end(), [&](unsigned x) { return x >= i; }));
  return c;
}

// Finite abelian 2-group with elements encoded in mixed radix.
class SmallGroup {
 public:
  explicit SmallGroup(std::vector<unsigned> moduli) : mod_(std::move(moduli)) {
    size_ = 1;
    for (unsigned m : mod_) size_ *= m;
    coords_.resize(size_);
    for (std::size_t x = 0; x < size_; ++x) {
      std::size_t r = x;
      for (unsigned m : mod_) {
        coords_[x].push_back(static_cast<unsigned>(r % m));
        r /= m;
      }
    }
  }

  std::size_t size() const { return size_; }
  const std::vector<unsigned>& coords(std::size_t x) const { return coords_[x]; }

  std::size_t add(std::size_t x, std::size_t y) const {
    std::size_t r = 0, scale = 1;
    for (std::size_t i = 0; i < mod_.size(); ++i) {
      r += ((coords_[x][i] + coords_[y][i]) % mod_[i]) * scale;
      scale *= mod_[i];
    }
    return r;
  }

 private:
  std::vector<unsigned> mod_;
  std::size_t size_;
  std::vector<std::vector<unsigned>> coords_;
};

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t x) { return (b[x / 64] >> (x % 64)) & 1u; }
void set(Bits& b, std::size_t x) { b[x / 64] |= std::uint64_t(1) << (x % 64); }

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> members(const Bits& b, std::size_t n) {
  std::vector<std::size_t> r;
  for (std::size_t x = 0; x < n; ++x)
    if (test(b, x)) r.push_back(x);
  return r;
}

// H + <g> for a subgroup H.
Bits join(const SmallGroup& g, const Bits& h, std::size_t gen) {
  Bits r = h;
  const auto hm = members(h, g.size());
  std::size_t cur = gen;
  while (!test(h, cur)) {
    for (auto x : hm) set(r, g.add(x, cur));
    cur = g.add(cur, gen);
  }
  return r;
}

}  // namespace

Int count_subgroups(const std::vector<unsigned>& lambda_in, unsigned p, unsigned k) {
  std::vector<unsigned> lambda = lambda_in;
  std::sort(lambda.rbegin(), lambda.rend());
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  const std::vector<long> lc = conjugate(lambda);
  const Int P = p;
  Int total = 0;
  std::vector<unsigned> nu;
  std::function<void(std::size_t, unsigned, unsigned)> rec = [&](std::size_t i, unsigned left, unsigned cap) {
    if (left == 0) {
      std::vector<long> nc = conjugate(nu);
      auto at = [](const std::vector<long>& v, std::size_t j) { return j < v.size() ? v[j] : 0L; };
      Int term = 1;
      for (std::size_t j = 0; j < lc.size(); ++j) {
        const long e = at(nc, j + 1) * (at(lc, j) - at(nc, j));
        term *= pow_int(P, static_cast<unsigned long>(e));
        term *= gaussian_binomial(at(lc, j) - at(nc, j + 1), at(nc, j) - at(nc, j + 1), P);
      }
      total += term;
      return;
    }
    if (i >= lambda.size()) return;
    for (unsigned v = std::min({cap, left, lambda[i]}); v >= 1; --v) {
      nu.push_back(v);
      rec(i + 1, left - v, v);
      nu.pop_back();
    }
  };
  rec(0, k, k);
  return total;
}

namespace {

std::vector<unsigned> two_group_moduli(const AbelianGroup& grp) {
  if (grp.order() > 4096) throw InputError("character search: group too large for enumeration");
  std::vector<unsigned> mod;
  for (auto& d : grp.invariant_factors) {
    if (d < 2 || (d & (d - 1)) != 0) throw InputError("character search: invariant factors must be powers of 2");
    mod.push_back(static_cast<unsigned>(d.get_ui()));
  }
  return mod;
}

bool vanishes(const SmallGroup& g, const std::vector<int>& c, const std::vector<std::size_t>& elems) {
  for (auto x : elems) {
    unsigned s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * (g.coords(x)[i] & 1u);
    if (s % 2) return false;
  }
  return true;
}

Bits generated(const SmallGroup& g, const std::vector<unsigned>& mod, const std::vector<std::vector<Int>>& gens) {
  Bits h((g.size() + 63) / 64, 0);
  set(h, 0);
  for (auto& v : gens) {
    if (v.size() != mod.size()) throw InputError("generator has the wrong number of coordinates");
    std::size_t x = 0, scale = 1;
    for (std::size_t i = 0; i < mod.size(); ++i) {
      x += mod_small(v[i], mod[i]) * scale;
      scale *= mod[i];
    }
    h = join(g, h, x);
  }
  return h;
}

enum class TriCase { a1_even, b1_even, b1_odd, failed };

// Character from the triangular-generator argument on the first two summands.
TriCase triangular(const SmallGroup& g, const std::vector<unsigned>& mod, const std::vector<std::size_t>& elems,
                   std::vector<int>& chi) {
  chi.assign(mod.size(), 0);
  unsigned a1 = mod[0], b2 = mod[1];
  for (auto x : elems) {
    const auto& c = g.coords(x);
    if (c[0] != 0) a1 = std::min(a1, c[0]);
    else if (c[1] != 0) b2 = std::min(b2, c[1]);
  }
  if (a1 % 2 == 0) {
    chi[0] = 1;
    return TriCase::a1_even;
  }
  if (b2 % 2 != 0) return TriCase::failed;
  unsigned b1 = 0;
  for (auto x : elems)
    if (g.coords(x)[0] == a1) {
      b1 = g.coords(x)[1];
      break;
    }
  if (b1 % 2 == 0) {
    chi[1] = 1;
    return TriCase::b1_even;
  }
  chi[0] = chi[1] = 1;
  return TriCase::b1_odd;
}

}  // namespace

CharacterSearchReport character_search(const AbelianGroup& grp, std::size_t killed, const Int& subgroup_order) {
  CharacterSearchReport rep;
  rep.group = grp;
  rep.killed = killed;
  rep.subgroup_order = subgroup_order;
  if (killed > grp.invariant_factors.size()) throw InputError("character search: more killed summands than summands");
  const std::vector<unsigned> mod = two_group_moduli(grp);
  std::vector<unsigned> exps;
  for (unsigned m : mod) exps.push_back(static_cast<unsigned>(std::countr_zero(m)));
  if (subgroup_order < 1 || subgroup_order > grp.order() || (subgroup_order & (subgroup_order - 1)) != 0)
    throw InputError("character search: subgroup order must be a power of 2 dividing the group order");
  const std::size_t target = subgroup_order.get_ui();
  const unsigned k = static_cast<unsigned>(std::countr_zero(target));
  rep.subgroups_of_order_formula = count_subgroups(exps, 2, k).get_ui();

  SmallGroup g(mod);
  const std::size_t n = g.size();
  const std::size_t free = mod.size() - killed;
  std::vector<std::vector<int>> chars;
  for (std::size_t mask = 1; mask < (std::size_t(1) << free); ++mask) {
    std::vector<int> c(mod.size(), 0);
    for (std::size_t i = 0; i < free; ++i) c[i] = (mask >> i) & 1;
    chars.push_back(c);
  }

  Bits zero((n + 63) / 64, 0);
  set(zero, 0);
  std::set<Bits> seen{zero};
  std::deque<Bits> queue{zero};
  while (!queue.empty()) {
    Bits h = queue.front();
    queue.pop_front();
    if (popcount(h) >= target) continue;
    for (std::size_t x = 1; x < n; ++x) {
      if (test(h, x)) continue;
      Bits k2 = join(g, h, x);
      if (popcount(k2) > target) continue;
      if (seen.insert(k2).second) queue.push_back(std::move(k2));
    }
  }
  rep.subgroups_total = seen.size();

  for (const Bits& m : seen) {
    if (popcount(m) != target) continue;
    ++rep.subgroups_of_order;
    const auto elems = members(m, n);
    if (std::none_of(chars.begin(), chars.end(), [&](auto& c) { return vanishes(g, c, elems); }))
      ++rep.counterexamples;

    if (free != 2) continue;
    std::vector<int> chi;
    const TriCase tc = triangular(g, mod, elems, chi);
    if (tc == TriCase::failed || !vanishes(g, chi, elems)) {
      ++rep.case_failures;
      continue;
    }
    std::string label;
    switch (tc) {
      case TriCase::a1_even: ++rep.case_a1_even; label = "a1 even"; break;
      case TriCase::b1_even: ++rep.case_b1_even; label = "a1 odd, b1 even"; break;
      default: ++rep.case_b1_odd; label = "a1 odd, b1 odd"; break;
    }
    if (std::none_of(rep.examples.begin(), rep.examples.end(), [&](auto& e) { return e.first == label; }))
      rep.examples.emplace_back(label, Character2{chi});
  }
  return rep;
}

Character2 triangular_character(const AbelianGroup& grp, std::size_t killed, const std::vector<std::vector<Int>>& gens) {
  const std::vector<unsigned> mod = two_group_moduli(grp);
  if (killed > mod.size() || mod.size() - killed != 2)
    throw InputError("triangular argument needs exactly two summands outside the killed ones");
  SmallGroup g(mod);
  const auto elems = members(generated(g, mod, gens), g.size());
  std::vector<int> chi;
  if (triangular(g, mod, elems, chi) == TriCase::failed)
    throw InputError("triangular argument: odd pivot in both coordinates");
  return Character2{chi};
}

bool vanishes_on(const AbelianGroup& grp, const Character2& chi, const std::vector<std::vector<Int>>& gens) {
  const std::vector<unsigned> mod = two_group_moduli(grp);
  if (chi.values.size() != mod.size()) throw InputError("character has the wrong number of values");
  SmallGroup g(mod);
  return vanishes(g, chi.values, members(generated(g, mod, gens), g.size()));
}

IntPoly twisted_poly_trivial_char(const IntPoly& d, unsigned p) {
  require_prime(p);
  if (d.is_zero()) throw InputError("zero Alexander polynomial");
  return norm_np(d, p);
}

Zeta8Report verify_zeta8_factorization() {
  const unsigned n = 8;
  const CycloElement one(n, 1), z = CycloElement::zeta(n, 1), z3 = CycloElement::zeta(n, 3);
  const CycloElement two(n, 2), four(n, 4);
  const CycloElement c1 = two * z - two * z3 - four;
  const CycloElement c2 = -(two * z) + two * z3 - four;
  const CycloPoly f1{one, c1, one}, f2{one, c2, one};
  const IntPoly target{1, -8, 10, -8, 1};

  Zeta8Report r;
  const CycloPoly prod = cyclo_poly_mul(f1, f2);
  r.product_matches = prod.size() == static_cast<std::size_t>(target.degree() + 1);
  for (std::size_t i = 0; r.product_matches && i < prod.size(); ++i)
    r.product_matches = prod[i] == CycloElement(n, Rat(target.coeff(i)));
  auto real = [](const CycloPoly& f) {
    return std::all_of(f.begin(), f.end(), [](const CycloElement& c) { return c.conj() == c; });
  };
  r.first_real = real(f1);
  r.second_real = real(f2);
  r.conjugate_pair = true;
  for (std::size_t i = 0; i < f1.size(); ++i)
    if (f1[i].conj() != f2[i]) r.conjugate_pair = false;
  r.palindromic = f1.front() == f1.back() && f2.front() == f2.back();
  return r;
}

std::string to_string(QuarticGalois g) {
  switch (g) {
    case QuarticGalois::C4: return "C4";
    case QuarticGalois::V4: return "V4";
    case QuarticGalois::D4: return "D4";
    case QuarticGalois::A4: return "A4";
    case QuarticGalois::S4: return "S4";
  }
  return "?";
}

bool is_abelian(QuarticGalois g) { return g == QuarticGalois::C4 || g == QuarticGalois::V4; }

long group_order(QuarticGalois g) {
  switch (g) {
    case QuarticGalois::C4:
    case QuarticGalois::V4: return 4;
    case QuarticGalois::D4: return 8;
    case QuarticGalois::A4: return 12;
    case QuarticGalois::S4: return 24;
  }
  return 0;
}

namespace {

std::vector<Rat> rational_roots(const RatPoly& p) {
  std::vector<Rat> roots;
  const IntPoly q = p.to_primitive();
  const SymmetricFactorization sf = factor_rational(q);
  if (sf.t_power > 0) roots.emplace_back(0);
  for (auto& fac : sf.factors)
    if (fac.poly.degree() == 1) {
      Rat r(-fac.poly.coeff(0), fac.poly.coeff(1));
      r.canonicalize();
      roots.push_back(r);
    }
  return roots;
}

bool square_or_in(const Rat& e, const Int& disc) {
  return e == 0 || is_rational_square(e) || is_rational_square(e * Rat(disc));
}

}  // namespace

QuarticGalois quartic_galois(const IntPoly& p) {
  if (p.degree() != 4) throw InputError("quartic_galois: degree " + std::to_string(p.degree()) + ", expected 4");
  const SymmetricFactorization sf = factor_rational(p.primitive());
  if (sf.t_power != 0 || sf.factors.size() != 1 || sf.factors[0].exponent != 1)
    throw InputError("quartic_galois: " + p.str() + " is not irreducible");
  const RatPoly m = RatPoly(p).monic();
  const Rat a = m.coeff(3), b = m.coeff(2), c = m.coeff(1), d = m.coeff(0);
  const RatPoly resolvent(std::vector<Rat>{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1});
  const Int disc = discriminant(p);
  const auto roots = rational_roots(resolvent);
  if (roots.size() >= 3) return QuarticGalois::V4;
  if (roots.empty()) return is_perfect_square(disc) ? QuarticGalois::A4 : QuarticGalois::S4;
  const Rat r = roots[0];
  const Rat e1 = r * r - 4 * d, e2 = a * a - 4 * (b - r);
  return square_or_in(e1, disc) && square_or_in(e2, disc) ? QuarticGalois::C4 : QuarticGalois::D4;
}

bool cyclotomic_embedding_obstruction(const IntPoly& p) { return !is_abelian(quartic_galois(p)); }

}  // namespace ckit
