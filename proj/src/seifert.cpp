#include "ckit/seifert.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ckit/linalg.hpp"
#include "ckit/witt.hpp"

namespace ckit {

namespace {

// Gaussian rational a + b i.
struct GRat {
  Rat re, im;
  GRat operator+(const GRat& o) const { return {re + o.re, im + o.im}; }
  GRat operator-(const GRat& o) const { return {re - o.re, im - o.im}; }
  GRat operator*(const GRat& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  GRat operator/(const GRat& o) const {
    Rat d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  GRat conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
};

GRat omega(const CirclePoint& w) {
  if (w.minus_one) return {Rat(-1), Rat(0)};
  Rat d = 1 + w.s * w.s;
  return {(1 - w.s * w.s) / d, 2 * w.s / d};
}

// Signature of a Hermitian matrix by congruence diagonalization.
long hermitian_signature(std::vector<std::vector<GRat>> h) {
  const std::size_t n = h.size();
  long sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && h[piv][piv].re == 0) ++piv;
    if (piv == n) {
      std::size_t j = n;
      for (std::size_t c = k + 1; c < n && j == n; ++c)
        if (!h[k][c].is_zero()) j = c;
      if (j == n) {
        // Row k is zero in the remaining block: move a nonzero row here.
        for (std::size_t r = k + 1; r < n && j == n; ++r)
          for (std::size_t c = r + 1; c < n; ++c)
            if (!h[r][c].is_zero()) {
              std::swap(h[k], h[r]);
              for (auto& row : h) std::swap(row[k], row[r]);
              j = c;
              break;
            }
      }
      if (j == n) continue;
      // R_k += c R_j, C_k += conj(c) C_j with c = h_kj: h_kk = 2|h_kj|^2.
      GRat c = h[k][j];
      for (std::size_t x = 0; x < n; ++x) h[k][x] = h[k][x] + c * h[j][x];
      for (std::size_t x = 0; x < n; ++x) h[x][k] = h[x][k] + c.conj() * h[x][j];
      piv = k;
    }
    if (piv != k) {
      std::swap(h[k], h[piv]);
      for (auto& row : h) std::swap(row[k], row[piv]);
    }
    const Rat a = h[k][k].re;
    CKIT_ASSERT(h[k][k].im == 0, "Hermitian diagonal not real");
    sig += sgn(a);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (h[i][k].is_zero()) continue;
      GRat f = h[i][k] / GRat{a, Rat(0)};
      for (std::size_t x = k; x < n; ++x) h[i][x] = h[i][x] - f * h[k][x];
      for (std::size_t x = k; x < n; ++x) h[x][i] = h[i][x].conj();
    }
  }
  return sig;
}

// Pfaffian of a skew-symmetric matrix by symplectic elimination.
Rat pfaffian(RatMatrix a) {
  const std::size_t n = a.rows();
  Rat pf = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t j = k + 1;
    while (j < n && a(k, j) == 0) ++j;
    if (j == n) return 0;
    if (j != k + 1) {
      for (std::size_t x = 0; x < n; ++x) std::swap(a(j, x), a(k + 1, x));
      for (std::size_t x = 0; x < n; ++x) std::swap(a(x, j), a(x, k + 1));
      pf = -pf;
    }
    const Rat p = a(k, k + 1);
    pf *= p;
    for (std::size_t i = k + 2; i < n; ++i) {
      Rat f = a(k, i) / p, g = a(k + 1, i) / p;
      // Clear row k and k+1 beyond the pivot block by congruence.
      for (std::size_t x = 0; x < n; ++x) a(i, x) += g * a(k, x) - f * a(k + 1, x);
      for (std::size_t x = 0; x < n; ++x) a(x, i) += g * a(x, k) - f * a(x, k + 1);
    }
  }
  return pf;
}

GRat eval_at(const IntPoly& p, const GRat& z) {
  GRat r{Rat(0), Rat(0)};
  for (long i = p.degree(); i >= 0; --i) r = r * z + GRat{Rat(p.coeff(static_cast<std::size_t>(i))), Rat(0)};
  return r;
}

// u = 2(1 - s^2)/(1 + s^2), decreasing in s > 0.
Rat u_of(const Rat& s) { return 2 * (1 - s * s) / (1 + s * s); }

// Rational s > 0 with u(s) strictly inside (a, b), -2 < a < b < 2.
Rat s_in_gap(const Rat& a, const Rat& b) {
  Rat lo = 0, hi = 1;
  while (u_of(hi) >= b) hi *= 2;
  for (;;) {
    if (u_of(hi) > a) return hi;
    Rat mid = (lo + hi) / 2;
    Rat u = u_of(mid);
    if (u > a && u < b) return mid;
    if (u >= b)
      lo = mid;
    else
      hi = mid;
  }
}

}  // namespace

Rat CirclePoint::trace() const { return minus_one ? Rat(-2) : u_of(s); }

SeifertMatrix validate(const IntMatrix& v) {
  if (!v.square()) throw InputError("not a Seifert matrix: not square");
  if (v.rows() % 2 != 0) throw InputError("not a Seifert matrix: odd size " + std::to_string(v.rows()));
  Rat pf = pfaffian(to_rat(v - v.transpose()));
  if (pf != 1 && pf != -1) throw InputError("not a Seifert matrix: det(V - V^t) = " + Rat(pf * pf).get_str());
  return {v, pf == 1 ? 1 : -1};
}

SeifertMatrix mirror(const SeifertMatrix& s) { return validate(-s.V.transpose()); }

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  return validate(block_sum(a.V, b.V));
}

IntPoly alexander(const SeifertMatrix& s) {
  const std::size_t n = s.size();
  if (n == 0) return IntPoly{1};
  const IntMatrix vt = s.V.transpose();
  // det(V - x V^t) at x = 0..n, then Newton interpolation over Z.
  std::vector<Int> vals;
  for (std::size_t x = 0; x <= n; ++x) vals.push_back(det(s.V - vt.scaled(Int(static_cast<long>(x)))));
  std::vector<Rat> dd(vals.begin(), vals.end());
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = n; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(j));
  RatPoly r(std::vector<Rat>{dd[n]});
  for (std::size_t k = n; k-- > 0;)
    r = r * RatPoly(std::vector<Rat>{Rat(-static_cast<long>(k)), Rat(1)}) + RatPoly(std::vector<Rat>{dd[k]});
  std::vector<Int> c;
  for (auto& x : r.coeffs()) {
    CKIT_ASSERT(x.get_den() == 1, "Alexander polynomial not integral");
    c.push_back(x.get_num());
  }
  return normalize_alexander(IntPoly(c));
}

long signature(const SeifertMatrix& s) { return signature(to_rat(s.V + s.V.transpose())); }

long lt_signature_at(const SeifertMatrix& s, const CirclePoint& w) {
  if (!w.minus_one && w.s == 0) throw InputError("signature undefined at omega = 1");
  const GRat om = omega(w);
  if (eval_at(alexander(s), om).is_zero())
    throw InputError("signature undefined at jump; use local average separately");
  const GRat a = GRat{Rat(1), Rat(0)} - om;
  const GRat b = a.conj();
  const std::size_t n = s.size();
  std::vector<std::vector<GRat>> h(n, std::vector<GRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h[i][j] = a * GRat{Rat(s.V(i, j)), Rat(0)} + b * GRat{Rat(s.V(j, i)), Rat(0)};
  return hermitian_signature(std::move(h));
}

long SignatureProfile::max_abs() const {
  long m = std::abs(sigma_minus_one);
  for (auto& p : plateaus) m = std::max(m, std::abs(p.value));
  return m;
}

long SignatureProfile::total_jump(const IntPoly& delta) const {
  long t = 0;
  for (auto& j : jumps)
    if (j.delta == delta) t += std::abs(j.jump);
  return t;
}

SignatureProfile signature_profile(const SeifertMatrix& s) {
  SignatureProfile prof;
  const IntPoly delta = alexander(s);
  struct Root {
    IntPoly delta;
    RatPoly eta;
    Rat lo, hi;
  };
  std::vector<Root> roots;
  if (delta.degree() > 0) {
    for (auto& f : factor_rational(delta).factors) {
      if (!f.symmetric || f.poly.degree() < 2) continue;
      RatPoly eta(trace_polynomial(f.poly));
      for (auto& [lo, hi] : isolate_real_roots(eta, Rat(-2), Rat(2), Rat(1, 64)))
        roots.push_back({f.poly, eta, lo, hi});
    }
  }
  // Shrink until the isolating intervals are pairwise disjoint.
  auto overlap = [](const Root& a, const Root& b) { return a.lo <= b.hi && b.lo <= a.hi; };
  auto refine = [](Root& r) {
    Rat mid = (r.lo + r.hi) / 2;
    if (count_roots(r.eta, r.lo, mid) == 1)
      r.hi = mid;
    else
      r.lo = mid;
  };
  for (auto& r : roots)
    while (r.hi >= 2 || r.lo <= -2) refine(r);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        while (overlap(roots[i], roots[j])) {
          refine(roots[i]);
          refine(roots[j]);
          changed = true;
        }
  }
  // Order from u = 2 (omega near 1) down to u = -2 (omega = -1).
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.hi > b.hi; });
  std::vector<std::pair<Rat, Rat>> gaps;
  Rat upper = 2;
  for (auto& r : roots) {
    gaps.emplace_back(r.hi, upper);
    upper = r.lo;
  }
  gaps.emplace_back(Rat(-2), upper);
  for (auto& [a, b] : gaps) {
    CirclePoint w = CirclePoint::at(s_in_gap(a, b));
    prof.plateaus.push_back({a, b, w, lt_signature_at(s, w)});
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    prof.jumps.push_back({roots[i].delta, roots[i].lo, roots[i].hi,
                          prof.plateaus[i + 1].value - prof.plateaus[i].value});
  prof.sigma_minus_one = lt_signature_at(s, CirclePoint::negative_one());
  CKIT_ASSERT(prof.plateaus.front().value == 0, "signature near omega = 1 is not 0");
  return prof;
}

IsometricStructure isometric_structure(const SeifertMatrix& s) {
  RatMatrix v = to_rat(s.V);
  auto inv = inverse(v);
  if (!inv) throw InputError("singular Seifert matrix: call invertible_representative first");
  IsometricStructure st{v + v.transpose(), *inv * v.transpose()};
  st.check();
  return st;
}

namespace {

IntMatrix unimodular_inverse(const IntMatrix& u) {
  auto inv = inverse(to_rat(u));
  CKIT_ASSERT(inv.has_value(), "unimodular matrix not invertible");
  return to_int(*inv);
}

// One reduction step on a singular Seifert matrix; returns a matrix two
// sizes smaller.
IntMatrix split_off_pair(const IntMatrix& v) {
  const std::size_t n = v.rows();
  RatMatrix k = kernel(to_rat(v));
  CKIT_ASSERT(k.cols() > 0, "split_off_pair on nonsingular matrix");
  std::vector<Rat> col;
  for (std::size_t i = 0; i < n; ++i) col.push_back(k(i, 0));
  IntMatrix p = unimodular_with_first_column(primitive_integer(col));
  IntMatrix w = p.transpose() * v * p;
  for (std::size_t i = 0; i < n; ++i) CKIT_ASSERT(w(i, 0) == 0, "kernel column not cleared");
  // The first row is primitive because V - V^t is unimodular.
  std::vector<Int> row;
  for (std::size_t j = 1; j < n; ++j) row.push_back(w(0, j));
  IntMatrix u = unimodular_with_first_column(row);
  IntMatrix q = unimodular_inverse(u).transpose();
  IntMatrix d = block_sum(IntMatrix::identity(1), q);
  w = d.transpose() * w * d;
  CKIT_ASSERT(w(0, 1) == 1, "partner row not normalized");
  return w.block(2, 2, n - 2, n - 2);
}

std::map<IntPoly, unsigned> symmetric_parities(const IntPoly& p) {
  std::map<IntPoly, unsigned> out;
  if (p.degree() <= 0) return out;
  for (auto& f : factor_rational(p).factors)
    if (f.symmetric && f.exponent % 2 == 1) out[f.poly] = 1;
  return out;
}

}  // namespace

SeifertMatrix invertible_representative(const SeifertMatrix& s) {
  IntMatrix v = s.V;
  while (v.rows() > 0 && det(v) == 0) {
    std::size_t before = v.rows();
    v = split_off_pair(v);
    CKIT_ASSERT(v.rows() + 2 == before, "reduction did not shrink the matrix");
  }
  if (v == s.V) return s;
  SeifertMatrix r = validate(v);
  CKIT_ASSERT(symmetric_parities(alexander(r)) == symmetric_parities(alexander(s)),
              "invertible_representative changed the odd symmetric factors");
  std::vector<long> a, b;
  for (auto& p : signature_profile(r).plateaus) a.push_back(p.value);
  for (auto& p : signature_profile(s).plateaus) b.push_back(p.value);
  a.erase(std::unique(a.begin(), a.end()), a.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  CKIT_ASSERT(a == b, "invertible_representative changed the signature function");
  return r;
}

std::vector<KnotRecord> ingest_text(const std::string& text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_array()) throw InputError(source + ": expected a JSON array of knot records");
  std::vector<KnotRecord> out;
  for (std::size_t idx = 0; idx < doc.size(); ++idx) {
    const auto& j = doc[idx];
    std::string where = source + ": record " + std::to_string(idx);
    try {
      if (!j.is_object()) throw InputError("not an object");
      KnotRecord k;
      k.name = j.at("name").get<std::string>();
      where += " (" + k.name + ")";
      std::vector<std::vector<Int>> rows;
      for (auto& r : j.at("seifert_matrix")) {
        std::vector<Int> row;
        for (auto& x : r) {
          if (x.is_number_integer())
            row.emplace_back(x.get<long>());
          else if (x.is_string())
            row.emplace_back(x.get<std::string>());
          else
            throw InputError("non-integer matrix entry");
        }
        rows.push_back(row);
      }
      k.seifert = validate(IntMatrix::from_rows(rows));
      if (j.contains("genus3") && !j["genus3"].is_null()) k.genus3 = j["genus3"].get<long>();
      if (j.contains("g4_upper") && !j["g4_upper"].is_null()) k.g4_upper = j["g4_upper"].get<long>();
      if (j.contains("notes")) k.notes = j["notes"].get<std::string>();
      out.push_back(std::move(k));
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return out;
}

std::vector<KnotRecord> ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open knot file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ingest_text(ss.str(), path);
}

}  // namespace ckit
