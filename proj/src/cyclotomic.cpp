#include "ckit/cyclotomic.hpp"

#include <numeric>

namespace ckit {

namespace {

RatPoly reduce_mod(const RatPoly& p, unsigned n) { return p.divmod(RatPoly(cyclotomic(n))).second; }

std::vector<Rat> padded(const RatPoly& p, unsigned n) {
  std::vector<Rat> c = p.coeffs();
  c.resize(static_cast<std::size_t>(cyclotomic(n).degree()));
  return c;
}

}  // namespace

CycloElement::CycloElement(unsigned n, const Rat& a) : n_(n) {
  CKIT_ASSERT(n >= 1, "conductor must be positive");
  c_ = padded(RatPoly(std::vector<Rat>{a}), n);
}

CycloElement::CycloElement(unsigned n, const RatPoly& p) : n_(n) {
  CKIT_ASSERT(n >= 1, "conductor must be positive");
  c_ = padded(reduce_mod(p, n), n);
}

CycloElement CycloElement::zeta(unsigned n, unsigned k) {
  std::vector<Rat> c(k % n + 1);
  c[k % n] = 1;
  return CycloElement(n, RatPoly(c));
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
  CKIT_ASSERT(n_ == o.n_, "conductor mismatch");
  return CycloElement(n_, as_poly() + o.as_poly());
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
  CKIT_ASSERT(n_ == o.n_, "conductor mismatch");
  return CycloElement(n_, as_poly() - o.as_poly());
}

CycloElement CycloElement::operator-() const { return CycloElement(n_, -as_poly()); }

CycloElement CycloElement::operator*(const CycloElement& o) const {
  CKIT_ASSERT(n_ == o.n_, "conductor mismatch");
  return CycloElement(n_, as_poly() * o.as_poly());
}

CycloElement CycloElement::galois(unsigned k) const {
  CKIT_ASSERT(std::gcd(k, n_) == 1, "galois: exponent not a unit");
  CycloElement r(n_);
  CycloElement z = zeta(n_, k % n_);
  CycloElement power(n_, Rat(1));
  for (auto& a : c_) {
    r = r + power * CycloElement(n_, a);
    power = power * z;
  }
  return r;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycloElement::norm() const {
  CycloElement r(n_, Rat(1));
  for (unsigned k = 1; k <= n_; ++k)
    if (std::gcd(k, n_) == 1) r = r * galois(k);
  CKIT_ASSERT(r.is_rational(), "norm not rational");
  return r.c_[0];
}

CycloElement eval_cyclotomic(const IntPoly& p, unsigned n) { return CycloElement(n, RatPoly(p)); }

CycloPoly cyclo_poly_mul(const CycloPoly& a, const CycloPoly& b) {
  if (a.empty() || b.empty()) return {};
  const unsigned n = a[0].conductor();
  CycloPoly r(a.size() + b.size() - 1, CycloElement(n));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

}  // namespace ckit
