#include "ckit/isometric.hpp"

#include <algorithm>
#include <optional>

#include "ckit/linalg.hpp"
#include "ckit/polymod.hpp"
#include "ckit/witt.hpp"

namespace ckit {

namespace {

RatMatrix mat_pow(const RatMatrix& m, unsigned e) {
  RatMatrix r = RatMatrix::identity(m.rows());
  for (unsigned i = 0; i < e; ++i) r = r * m;
  return r;
}

RatMatrix hcat(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

IsometricStructure restrict(const IsometricStructure& s, const RatMatrix& basis) {
  auto t = solve(basis, s.T * basis);
  CKIT_ASSERT(t.has_value(), "subspace is not T-invariant");
  IsometricStructure r{basis.transpose() * s.Q * basis, *t};
  r.check();
  return r;
}

// ---------------------------------------------------------------- Q(sqrt D)

struct Quad {
  Rat a, b;  // a + b sqrt(D)
  bool is_zero() const { return a == 0 && b == 0; }
};

struct QuadField {
  Int D;
  Quad add(const Quad& x, const Quad& y) const { return {x.a + y.a, x.b + y.b}; }
  Quad sub(const Quad& x, const Quad& y) const { return {x.a - y.a, x.b - y.b}; }
  Quad mul(const Quad& x, const Quad& y) const {
    return {x.a * y.a + Rat(D) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  Quad inv(const Quad& x) const {
    Rat n = x.a * x.a - Rat(D) * x.b * x.b;
    CKIT_ASSERT(n != 0, "inverse of zero in Q(sqrt D)");
    return {x.a / n, -x.b / n};
  }
};

using QuadMatrix = std::vector<std::vector<Quad>>;

QuadMatrix lift(const RatMatrix& m) {
  QuadMatrix r(m.rows(), std::vector<Quad>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = {m(i, j), Rat(0)};
  return r;
}

QuadMatrix mul(const QuadField& f, const QuadMatrix& x, const QuadMatrix& y) {
  const std::size_t cols = y.empty() ? 0 : y[0].size();
  QuadMatrix r(x.size(), std::vector<Quad>(cols));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] = f.add(r[i][j], f.mul(x[i][k], y[k][j]));
    }
  return r;
}

QuadMatrix transpose(const QuadMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  QuadMatrix r(cols, std::vector<Quad>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r[j][i] = m[i][j];
  return r;
}

// Columns spanning the kernel.
QuadMatrix kernel(const QuadField& f, QuadMatrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Quad s = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Quad g = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(g, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  QuadMatrix basis(cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Quad> v(cols);
    v[free] = {Rat(1), Rat(0)};
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(Quad{}, m[i][free]);
    for (std::size_t i = 0; i < cols; ++i) basis[i].push_back(v[i]);
  }
  return basis;
}

std::vector<Quad> congruence_diagonal(const QuadField& f, QuadMatrix g) {
  const std::size_t n = g.size();
  auto add_to = [&](std::size_t i, std::size_t j) {
    for (std::size_t x = 0; x < n; ++x) g[i][x] = f.add(g[i][x], g[j][x]);
    for (std::size_t x = 0; x < n; ++x) g[x][i] = f.add(g[x][i], g[x][j]);
  };
  auto swap_idx = [&](std::size_t i, std::size_t j) {
    std::swap(g[i], g[j]);
    for (auto& row : g) std::swap(row[i], row[j]);
  };
  std::vector<Quad> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && g[p][p].is_zero()) ++p;
    if (p == n) {
      for (std::size_t i = k; i < n && p == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!g[i][j].is_zero()) {
            add_to(i, j);
            p = i;
            break;
          }
      CKIT_ASSERT(p != n, "degenerate form over Q(sqrt D)");
    }
    swap_idx(k, p);
    Quad s = f.inv(g[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (g[i][k].is_zero()) continue;
      Quad c = f.mul(g[i][k], s);
      for (std::size_t x = k; x < n; ++x) g[i][x] = f.sub(g[i][x], f.mul(c, g[k][x]));
      for (std::size_t x = k; x < n; ++x) g[x][i] = g[i][x];
    }
    out.push_back(g[k][k]);
  }
  return out;
}

// ---------------------------------------------------------------- p-adic helpers

// Square root of a quadratic residue modulo an odd prime (Tonelli-Shanks).
Int sqrt_mod_prime(const Int& a, const Int& p) {
  Int q = p - 1, z = 2, r, t, c, b;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  while (legendre(z, p) != -1) ++z;
  auto powm = [&](const Int& base, const Int& e) {
    Int out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return out;
  };
  c = powm(z, q);
  r = powm(a, (q + 1) / 2);
  t = powm(a, q);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = mod(tt * tt, p);
      ++i;
    }
    b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod(b * b, p);
    r = mod(r * b, p);
    c = mod(b * b, p);
    t = mod(t * c, p);
    m = i;
  }
  Int other = p - r;
  return r < other ? r : other;
}

// R with R = r mod p^n for a fixed square root r of the unit square w in Z_p.
Int sqrt_approx(const Int& w, const Int& p, unsigned long n) {
  if (p == 2) {
    CKIT_ASSERT(mod(w, Int(8)) == 1, "not a 2-adic unit square");
    Int r = 1;
    for (unsigned long j = 2; j < n; ++j) {
      Int m = pow_int(2, j + 2);
      if (mod(r * r - w, m) != 0) r += pow_int(2, j);
    }
    return r;
  }
  Int r = sqrt_mod_prime(mod(w, p), p);
  for (unsigned long k = 1; k < n; k *= 2) {
    Int m = pow_int(p, std::min(2 * k, n));
    r = mod(r - (r * r - w) * inv_mod(mod(2 * r, m), m), m);
  }
  return r;
}

// Integer in the Q_p square class of a nonzero rational.
Int qp_class(const Rat& y, const Int& p) {
  long v = valuation(y, p);
  Rat u = y;
  if (v > 0) u /= Rat(pow_int(p, static_cast<unsigned long>(v)));
  if (v < 0) u *= Rat(pow_int(p, static_cast<unsigned long>(-v)));
  Int rep = mod(u.get_num() * u.get_den(), pow_int(p, 3));
  return (v % 2 != 0) ? Int(rep * p) : rep;
}

// Image of x in Q_p under sqrt(D) -> the root fixed by sqrt_approx.
Int qp_class(const Quad& x, const Int& D, const Int& p) {
  CKIT_ASSERT(!x.is_zero(), "square class of zero");
  if (x.b == 0) return qp_class(x.a, p);
  long vd = valuation(D, p);
  Int scale = pow_int(p, static_cast<unsigned long>(vd / 2));
  Int w = D / (scale * scale);
  long vb = valuation(x.b, p);
  for (unsigned long n = 16;; n *= 2) {
    Rat y = x.a + x.b * Rat(scale * sqrt_approx(w, p, n));
    long err = vb + vd / 2 + static_cast<long>(n);
    if (y != 0 && valuation(y, p) + 3 <= err) return qp_class(y, p);
  }
}

bool irreducible_mod_p(const IntPoly& f, const Int& p) {
  if (p > Int(1L << 31) || mod(f.lead(), p) == 0) return false;
  const auto pp = static_cast<std::int64_t>(p.get_si());
  auto fac = modp::factor(modp::reduce(f, pp), pp);
  return fac.size() == 1 && fac[0].second == 1;
}

// No monic factorization modulo 4.
bool irreducible_mod_4(const IntPoly& f) {
  if (mod(f.lead(), Int(2)) == 0) return false;
  const Int four = 4;
  IntPoly g = hensel::reduce(f.scaled(inv_mod(mod(f.lead(), four), four)), four);
  const long n = g.degree();
  for (long d = 1; 2 * d <= n; ++d) {
    std::vector<Int> c(static_cast<std::size_t>(d) + 1, Int(0));
    c.back() = 1;
    for (;;) {
      if (hensel::divmod_monic(g, IntPoly(c), four).second.is_zero()) return false;
      std::size_t k = 0;
      while (k < static_cast<std::size_t>(d) && ++c[k] == 4) c[k++] = 0;
      if (k == static_cast<std::size_t>(d)) break;
    }
  }
  return true;
}

std::string local_witness(const DiagonalForm& d, const Int& p) {
  if (p == 2) {
    DiagonalForm split;
    for (std::size_t i = 0; i < d.rank() / 2; ++i) split.entries.insert(split.entries.end(), {Int(1), Int(-1)});
    if (d.rank() % 2 != 0) return "Q_2: odd rank " + std::to_string(d.rank());
    return "Q_2: " + d.str() + " has discriminant ratio class " +
           to_string(qp_class(Rat(d.discriminant() * split.discriminant()), p)) + " and Hasse invariant " +
           std::to_string(hasse_invariant(d, p)) + " against " + std::to_string(hasse_invariant(split, p)) +
           " for the split form";
  }
  FiniteWittClass b = boundary_p(d, p);
  if (!finite_trivial(b)) return "boundary at " + p.get_str() + ": " + b.str();
  return "unit boundary at " + p.get_str() + ": " + boundary_p_unit(d, p).str();
}

// Q_p classes of the form on the two eigenspaces of S = T + T^{-1}, for
// quadratic eta with discriminant D a square in Q_p.
std::pair<DiagonalForm, DiagonalForm> eigen_split(const DeltaComponent& c, const RatMatrix& s, const IntPoly& eta,
                                                  const Int& D, const Int& p) {
  const QuadField f{D};
  const std::size_t n = c.structure.dim();
  const Rat e1(eta.coeff(1)), e2(eta.coeff(2));
  DiagonalForm halves[2];
  for (int h = 0; h < 2; ++h) {
    const Quad u{-e1 / (2 * e2), Rat(h == 0 ? 1 : -1) / (2 * e2)};
    QuadMatrix m = lift(s);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = f.sub(m[i][i], u);
    QuadMatrix mk = m;
    for (unsigned k = 1; k < c.exponent; ++k) mk = mul(f, mk, m);
    QuadMatrix b = kernel(f, mk);
    CKIT_ASSERT(!b.empty() && 2 * b[0].size() == n, "eigenspace of T + T^-1 has the wrong dimension");
    QuadMatrix g = mul(f, mul(f, transpose(b), lift(c.structure.Q)), b);
    for (auto& x : congruence_diagonal(f, g)) halves[h].entries.push_back(qp_class(x, D, p));
  }
  return {halves[0], halves[1]};
}

TriState split_local(const DeltaComponent& c, const RatMatrix& s, const IntPoly& eta, const Int& D, const Int& p) {
  auto [a, b] = eigen_split(c, s, eta, D, p);
  for (auto* d : {&a, &b})
    if (!trivial_over_qp(*d, p))
      return {Verdict::nontrivial, "Q_" + p.get_str() + " factor of " + c.delta.str() + ": " + local_witness(*d, p)};
  return {Verdict::trivial, "Q_" + p.get_str() + ": both factors of " + c.delta.str() + " trivial"};
}

RatMatrix trace_operator(const IsometricStructure& st) {
  auto inv = inverse(st.T);
  CKIT_ASSERT(inv.has_value(), "isometry not invertible");
  return st.T + *inv;
}

TriState local_decision(const DeltaComponent& c, const DiagonalForm& d, const RatMatrix& s, const IntPoly& eta,
                        const Int& p) {
  const std::string at = "Q_" + p.get_str();
  auto whole = [&]() -> TriState {
    if (trivial_over_qp(d, p)) return {Verdict::trivial, at + ": form trivial"};
    return {Verdict::nontrivial, local_witness(d, p)};
  };
  if (c.delta.degree() == 2 && is_square_qp(discriminant(c.delta), p))
    return {Verdict::trivial, at + ": " + c.delta.str() + " splits into linear factors"};
  if (eta.degree() <= 1) return whole();
  if (eta.degree() == 2) {
    Int D = discriminant(eta);
    if (!is_square_qp(D, p)) return whole();
    return split_local(c, s, eta, D, p);
  }
  if (irreducible_mod_p(eta, p) || irreducible_mod_p(c.delta, p) || (p == 2 && irreducible_mod_4(c.delta)))
    return whole();
  return {Verdict::undetermined, at + ": factorization of " + c.delta.str() + " over Q_" + p.get_str() + " not decided"};
}

// Signature of the form on the eigenspace of T + T^{-1} at each real root of
// eta in (-2, 2), read off from signatures of Q (S - c) at separators c.
TriState real_jumps(const DeltaComponent& c, const RatMatrix& s, const IntPoly& eta) {
  const IsometricStructure& st = c.structure;
  const std::size_t n = st.dim();
  const RatPoly er(eta);
  auto a_at = [&](const Rat& x) {
    RatMatrix m = s;
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= x;
    return signature(st.Q * m);
  };
  auto roots = isolate_real_roots(er, Rat(-2), Rat(2), Rat(1, 16));
  std::vector<Rat> seps{Rat(-2)};
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    CKIT_ASSERT(er.eval(roots[i].second) != 0, "separator is a root");
    seps.push_back(roots[i].second);
  }
  seps.push_back(Rat(2));
  std::vector<long> a;
  for (auto& x : seps) a.push_back(a_at(x));
  CKIT_ASSERT(a.front() == signature(st.Q), "eigenspace signatures do not add up");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    long si = (a[i] - a[i + 1]) / 2;
    if (si != 0)
      return {Verdict::nontrivial, "real place: signature " + std::to_string(si) + " at the root of " + eta.str("u") +
                                       " in (" + roots[i].first.get_str() + ", " + roots[i].second.get_str() + "]"};
  }
  return {Verdict::trivial, "real place"};
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::trivial:
      return "trivial";
    case Verdict::nontrivial:
      return "nontrivial";
    default:
      return "undetermined";
  }
}

RatPoly char_poly(const IsometricStructure& s) { return char_poly(s.T); }

Decomposition decompose(const IsometricStructure& s) {
  s.check();
  Decomposition out;
  if (s.dim() == 0) return out;
  if (det(s.Q) == 0) throw InputError("degenerate form in isometric structure");
  const SymmetricFactorization fac = factor_rational(char_poly(s).to_primitive());
  std::size_t total = 0;
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    const SymmetricFactor& f = fac.factors[i];
    const std::size_t dim = f.exponent * static_cast<std::size_t>(f.poly.degree());
    if (!f.symmetric) {
      out.paired_dim += dim;
      continue;
    }
    RatMatrix comp = RatMatrix::identity(s.dim());
    for (std::size_t j = 0; j < fac.factors.size(); ++j)
      if (j != i) comp = comp * mat_pow(eval_matrix(fac.factors[j].poly, s.T), fac.factors[j].exponent);
    RatMatrix image = column_basis(comp);
    RatMatrix ker = kernel(mat_pow(eval_matrix(f.poly, s.T), f.exponent));
    CKIT_ASSERT(image.cols() == dim, "delta-primary dimension does not match the multiplicity");
    CKIT_ASSERT(ker.cols() == dim && rank(hcat(image, ker)) == dim, "image and kernel methods disagree");
    DeltaComponent c{f.poly, f.exponent, restrict(s, image), image};
    CKIT_ASSERT(char_poly(c.structure).to_primitive() == f.poly.pow(f.exponent), "component char poly mismatch");
    total += dim;
    out.components.push_back(std::move(c));
  }
  CKIT_ASSERT(total + out.paired_dim == s.dim(), "components do not fill the space");
  std::sort(out.components.begin(), out.components.end(),
            [](const DeltaComponent& a, const DeltaComponent& b) { return a.delta < b.delta; });
  return out;
}

std::vector<Int> relevant_primes(const IsometricStructure& s) {
  std::vector<Int> out{Int(2)};
  auto add = [&](const Int& n) {
    if (n == 0) return;
    for (auto& p : prime_divisors(n))
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  Rat d = det(s.Q);
  add(d.get_num());
  add(d.get_den());
  if (s.dim() > 0) {
    IntPoly sqf{1};
    for (auto& f : factor_rational(char_poly(s).to_primitive()).factors) sqf = sqf * f.poly;
    if (sqf.degree() >= 1) add(discriminant(sqf));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<DiagonalForm, DiagonalForm>> qp_eigen_split(const DeltaComponent& c, const Int& p) {
  if (c.delta.degree() != 4) return std::nullopt;
  IntPoly eta = trace_polynomial(c.delta);
  Int D = discriminant(eta);
  if (!is_square_qp(D, p)) return std::nullopt;
  return eigen_split(c, trace_operator(c.structure), eta, D, p);
}

TriState component_trivial(const DeltaComponent& c) { return component_trivial(c, {}); }

TriState component_trivial(const DeltaComponent& c, const std::vector<Int>& extra_primes) {
  const IsometricStructure& st = c.structure;
  const long sig = signature(st.Q);
  if (sig != 0) return {Verdict::nontrivial, "real place: signature " + std::to_string(sig)};
  if (c.exponent % 2 != 0)
    return {Verdict::nontrivial, "odd exponent " + std::to_string(c.exponent) + " of " + c.delta.str()};
  IntPoly eta;
  RatMatrix s;
  if (c.delta.degree() >= 2) {
    eta = trace_polynomial(c.delta);
    s = trace_operator(st);
    TriState r = real_jumps(c, s, eta);
    if (!r.trivial()) return r;
  }
  const DiagonalForm d = diagonalize(st.Q);
  std::vector<std::string> undecided;
  // Odd primes first: their boundary classes are the more readable witnesses.
  std::vector<Int> primes = relevant_primes(st);
  for (auto& p : extra_primes)
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  std::rotate(primes.begin(), primes.begin() + 1, primes.end());
  for (auto& p : primes) {
    TriState r = local_decision(c, d, s, eta, p);
    if (r.nontrivial()) return r;
    if (r.value == Verdict::undetermined) undecided.push_back(r.witness);
  }
  if (!undecided.empty()) {
    std::string w;
    for (auto& u : undecided) w += (w.empty() ? "" : "; ") + u;
    return {Verdict::undetermined, w};
  }
  return {Verdict::trivial, "trivial at the real place and at every relevant prime"};
}

TriState witt_trivial(const IsometricStructure& s) {
  const Decomposition dec = decompose(s);
  const std::vector<Int> primes = relevant_primes(s);
  std::string undecided;
  for (auto& c : dec.components) {
    TriState r = component_trivial(c, primes);
    if (r.nontrivial()) return {Verdict::nontrivial, c.delta.str() + ": " + r.witness};
    if (r.value == Verdict::undetermined) undecided += (undecided.empty() ? "" : "; ") + c.delta.str() + ": " + r.witness;
  }
  if (!undecided.empty()) return {Verdict::undetermined, undecided};
  return {Verdict::trivial, "all " + std::to_string(dec.components.size()) + " components trivial"};
}

SeifertRecovery seifert_from(const IsometricStructure& s) {
  auto inv = inverse(RatMatrix::identity(s.dim()) + s.T);
  if (!inv) throw InputError("no representative via this formula: 1 + T is singular");
  SeifertRecovery r{SeifertRecovery::Kind::nonintegral, s.Q * *inv};
  for (std::size_t i = 0; i < r.V.rows(); ++i)
    for (std::size_t j = 0; j < r.V.cols(); ++j)
      if (r.V(i, j).get_den() != 1) return r;
  try {
    validate(to_int(r.V));
    r.kind = SeifertRecovery::Kind::seifert;
  } catch (const InputError&) {
    r.kind = SeifertRecovery::Kind::integral_non_seifert;
  }
  return r;
}

IsometricStructure scale_by_two(const IsometricStructure& s) { return {s.Q.scaled(Rat(2)), s.T}; }

TriState alg_concordant(const SeifertMatrix& v1, const SeifertMatrix& v2) {
  IsometricStructure a = isometric_structure(invertible_representative(v1));
  IsometricStructure b = isometric_structure(invertible_representative(v2));
  return witt_trivial(block_sum(a, -b));
}

}  // namespace ckit
