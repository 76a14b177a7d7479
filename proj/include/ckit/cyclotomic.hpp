#pragma once

#include <vector>

#include "ckit/poly.hpp"

namespace ckit {

/// Element of Q(zeta_n) in the power basis modulo the n-th cyclotomic polynomial.
class CycloElement {
 public:
  CycloElement(unsigned n, const Rat& a = 0);
  CycloElement(unsigned n, const RatPoly& p);
  static CycloElement zeta(unsigned n, unsigned k = 1);

  unsigned conductor() const { return n_; }
  /// Length deg Phi_n.
  const std::vector<Rat>& coeffs() const { return c_; }
  RatPoly as_poly() const { return RatPoly(c_); }

  CycloElement operator+(const CycloElement& o) const;
  CycloElement operator-(const CycloElement& o) const;
  CycloElement operator-() const;
  CycloElement operator*(const CycloElement& o) const;
  bool operator==(const CycloElement& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const CycloElement& o) const { return !(*this == o); }

  /// zeta -> zeta^k for gcd(k, n) = 1.
  CycloElement galois(unsigned k) const;
  /// Complex conjugation, zeta -> zeta^{-1}.
  CycloElement conj() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }
  /// Rational constant, if the element lies in Q.
  bool is_rational() const;
  /// Field norm to Q.
  Rat norm() const;

 private:
  unsigned n_;
  std::vector<Rat> c_;
};

/// p(zeta_n) reduced in the power basis.
CycloElement eval_cyclotomic(const IntPoly& p, unsigned n);

/// Polynomial in t with coefficients in Q(zeta_n), lowest degree first.
using CycloPoly = std::vector<CycloElement>;
CycloPoly cyclo_poly_mul(const CycloPoly& a, const CycloPoly& b);

}  // namespace ckit
