#pragma once

// Independent reference computations used only by the tests.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ckit/arith.hpp"
#include "ckit/matrix.hpp"
#include "ckit/poly.hpp"

namespace oracle {

using ckit::Int;
using ckit::IntMatrix;
using ckit::IntPoly;
using ckit::Rat;
using ckit::RatMatrix;

/// Cofactor-expansion determinant.
template <typename T>
T det_expand(const ckit::Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    ckit::Matrix<T> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    T term = m(0, j) * det_expand(minor);
    total += (j % 2 == 0) ? term : T(-term);
  }
  return total;
}

/// All divisors (positive and negative) of a nonzero integer.
inline std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out;
  Int a = abs(n);
  for (Int d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      if (d * d != a) {
        out.push_back(a / d);
        out.push_back(-a / d);
      }
    }
  return out;
}

/// Kronecker's method: whether f has a divisor of degree 1..maxdeg over Z.
inline bool has_small_divisor(const IntPoly& f, long maxdeg) {
  for (long d = 1; d <= maxdeg && 2 * d <= f.degree(); ++d) {
    // Interpolation nodes where f does not vanish.
    std::vector<long> xs;
    std::vector<std::vector<Int>> choices;
    for (long x = 0; static_cast<long>(xs.size()) <= d; x = (x <= 0 ? 1 - x : -x)) {
      Int v = f.eval(Int(x));
      if (v == 0) return true;
      xs.push_back(x);
      choices.push_back(divisors(v));
    }
    std::vector<std::size_t> idx(xs.size(), 0);
    for (;;) {
      // Lagrange interpolation through (xs[i], choices[i][idx[i]]).
      std::vector<Rat> g(static_cast<std::size_t>(d + 1));
      for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
          if (j == i) continue;
          std::vector<Rat> nb(basis.size() + 1);
          for (std::size_t k = 0; k < basis.size(); ++k) {
            nb[k + 1] += basis[k];
            nb[k] -= basis[k] * xs[j];
          }
          basis = nb;
          denom *= Rat(xs[i] - xs[j]);
        }
        Rat scale = Rat(choices[i][idx[i]]) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) g[k] += basis[k] * scale;
      }
      bool integral = g.back() != 0;
      std::vector<Int> gi;
      for (auto& c : g) {
        if (c.get_den() != 1) integral = false;
        gi.push_back(c.get_num());
      }
      if (integral) {
        IntPoly cand(gi);
        if (cand.degree() == d && f.exact_div(cand)) return true;
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return false;
}

/// Multiprecision complex number on mpf_class.
struct Complex {
  mpf_class re, im;
  Complex(double r = 0, double i = 0) : re(r, 256), im(i, 256) {}
  Complex(const mpf_class& r, const mpf_class& i) : re(r, 256), im(i, 256) {}
  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Complex operator/(const Complex& o) const {
    mpf_class d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  mpf_class abs2() const { return re * re + im * im; }
};

/// Durand-Kerner roots of a polynomial with nonzero leading coefficient.
inline std::vector<Complex> roots(const IntPoly& p) {
  const long n = p.degree();
  std::vector<Complex> c;
  for (auto& x : p.coeffs()) c.emplace_back(mpf_class(x, 256) / mpf_class(p.lead(), 256), mpf_class(0, 256));
  auto eval = [&](const Complex& z) {
    Complex r;
    for (long i = n; i >= 0; --i) r = r * z + c[static_cast<std::size_t>(i)];
    return r;
  };
  std::vector<Complex> z;
  Complex seed(0.4, 0.9), pw(1, 0);
  for (long i = 0; i < n; ++i) {
    z.push_back(pw);
    pw = pw * seed;
  }
  for (int it = 0; it < 2000; ++it) {
    mpf_class delta(0, 256);
    for (long i = 0; i < n; ++i) {
      Complex den(1, 0);
      for (long j = 0; j < n; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      Complex step = eval(z[i]) / den;
      z[i] = z[i] - step;
      if (step.abs2() > delta) delta = step.abs2();
    }
    if (delta < mpf_class("1e-140", 256)) break;
  }
  return z;
}

/// Random polynomial with coefficients in [-h, h] of exact degree d.
inline IntPoly random_poly(std::mt19937_64& rng, long d, long h) {
  std::uniform_int_distribution<long> u(-h, h);
  std::vector<Int> c;
  for (long i = 0; i <= d; ++i) c.emplace_back(u(rng));
  while (c.back() == 0) c.back() = u(rng);
  return IntPoly(c);
}


/// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier, lowest degree first.
inline std::vector<Rat> faddeev_leverrier(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = am;
    RatMatrix prod = a * m;
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
    c[n - k] = -tr / Rat(static_cast<long>(k));
  }
  return c;
}

/// Signature of a real symmetric matrix: all eigenvalues are real, so
/// Descartes' rule counts positive roots of the characteristic polynomial
/// exactly, and negative roots via x -> -x.
inline long descartes_signature(const RatMatrix& a) {
  auto c = faddeev_leverrier(a);
  auto changes = [](const std::vector<Rat>& v) {
    long n = 0;
    int prev = 0;
    for (auto& x : v) {
      int s = sgn(x);
      if (s == 0) continue;
      if (prev && s != prev) ++n;
      prev = s;
    }
    return n;
  };
  std::vector<Rat> neg = c;
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  return changes(c) - changes(neg);
}

/// Signature of the Hermitian matrix A + iB (A symmetric, B antisymmetric)
/// via the real 2n x 2n form [[A, -B], [B, A]], whose spectrum is doubled.
inline long hermitian_signature(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.rows();
  RatMatrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = a(i, j);
      r(n + i, n + j) = a(i, j);
      r(i, n + j) = -b(i, j);
      r(n + i, j) = b(i, j);
    }
  return descartes_signature(r) / 2;
}

/// Random Seifert matrix of size 2g: N + S with N - N^t the standard
/// symplectic matrix and S symmetric, then a random unimodular congruence.
inline IntMatrix random_seifert(std::mt19937_64& rng, std::size_t g, long h) {
  std::uniform_int_distribution<long> u(-h, h);
  const std::size_t n = 2 * g;
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) v(i, j) = v(j, i) = u(rng);
  for (std::size_t k = 0; k < g; ++k) v(2 * k, 2 * k + 1) += 1;
  IntMatrix p = IntMatrix::identity(n);
  std::uniform_int_distribution<long> e(-1, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p(i, j) = e(rng);
  return p.transpose() * v * p;
}

}  // namespace oracle
