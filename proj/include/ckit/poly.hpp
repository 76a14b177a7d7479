#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckit/arith.hpp"
#include "ckit/matrix.hpp"

namespace ckit {

/// Dense polynomial over Z, lowest degree first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    trim();
  }
  static IntPoly constant(const Int& a) { return IntPoly(std::vector<Int>{a}); }
  /// x^k
  static IntPoly monomial(std::size_t k, const Int& a = 1);

  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
  const Int& lead() const { return c_.back(); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(const Int& s) const;
  IntPoly pow(unsigned e) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }
  /// Total order used for canonical sorting (degree, then coefficients).
  bool operator<(const IntPoly& o) const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  IntPoly derivative() const;
  Int content() const;
  /// Primitive part with positive leading coefficient.
  IntPoly primitive() const;
  /// Coefficient reversal t^deg p(1/t).
  IntPoly reversed() const;
  /// p(x^k)
  IntPoly inflate(unsigned k) const;

  /// Exact division; nullopt when `d` does not divide this in Z[t].
  std::optional<IntPoly> exact_div(const IntPoly& d) const;

  /// "1 - 3t + 3t^2" style rendering.
  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// Dense polynomial over Q.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit RatPoly(const IntPoly& p);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const Rat& lead() const { return c_.back(); }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly scaled(const Rat& s) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
  RatPoly monic() const;
  Rat eval(const Rat& x) const;
  RatPoly derivative() const;
  /// Primitive integer polynomial with the same roots (positive leading coefficient).
  IntPoly to_primitive() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

RatPoly gcd(RatPoly a, RatPoly b);
/// Primitive gcd over Z[t] (positive leading coefficient).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Laurent polynomial t^offset * (coeffs[0] + coeffs[1] t + ...).
struct LaurentPoly {
  std::vector<Int> coeffs;
  long offset = 0;
};

/// Shift to a polynomial with nonzero constant term and positive constant
/// term.  Throws InputError("zero Alexander polynomial") on zero input.
IntPoly normalize_alexander(const LaurentPoly& p);
IntPoly normalize_alexander(const IntPoly& p);

/// p equals +/- its coefficient reversal.
bool is_symmetric(const IntPoly& p);

struct SymmetricFactor {
  IntPoly poly;        // irreducible over Q, primitive, positive leading coefficient
  unsigned exponent;
  bool symmetric;
  std::optional<std::size_t> partner;  // index of the reciprocal factor when not symmetric
};

struct SymmetricFactorization {
  int unit = 1;            // sign
  Int content = 1;         // positive content of the input
  long t_power = 0;        // power of t divided out
  std::vector<SymmetricFactor> factors;

  /// Product unit * content * t^t_power * prod factors^e.
  IntPoly expand() const;
  const SymmetricFactor* find(const IntPoly& f) const;
};

/// Squarefree decomposition of a primitive polynomial: pairs (part, multiplicity).
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& p);

/// Irreducible factors of a squarefree primitive polynomial of positive
/// degree (Zassenhaus: modular factorization, Hensel lifting, recombination).
std::vector<IntPoly> factor_squarefree(const IntPoly& p);

SymmetricFactorization factor_rational(const IntPoly& p);

/// Whether p = a t^d f(t) f(1/t) up to units (parity and pairing test).
bool fox_milnor_form(const IntPoly& p);

/// Smallest degree of an Alexander polynomial concordance-compatible with `p`
/// given the factors whose presence is forced (see README).
long min_concordant_degree(const IntPoly& p, const std::vector<IntPoly>& obstructed);

/// Sylvester-matrix determinant res(p, q).
Int resultant(const IntPoly& p, const IntPoly& q);
/// (-1)^{d(d-1)/2} res(p, p') / lc(p).
Int discriminant(const IntPoly& p);

/// n-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned n);

/// N_p(f)(t) = prod_{i<p} f(zeta_p^i x) with x^p = t.
IntPoly norm_np(const IntPoly& f, unsigned prime);

/// Trace polynomial h with p(t) = t^{deg/2} h(t + 1/t) for palindromic p of
/// even degree; throws InputError otherwise.
IntPoly trace_polynomial(const IntPoly& p);

/// Sturm-sequence count of distinct real roots of squarefree p in (a, b].
long count_roots(const RatPoly& p, const Rat& a, const Rat& b);

/// Disjoint isolating intervals (a, b] for the real roots of squarefree p
/// lying in (lo, hi), each of width at most `width`, sorted ascending.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const RatPoly& p, const Rat& lo, const Rat& hi,
                                                    const Rat& width);

/// Characteristic polynomial det(tI - M), by evaluation at n+1 points and
/// interpolation.
RatPoly char_poly(const RatMatrix& m);

/// Evaluate p at a square matrix (Horner).
RatMatrix eval_matrix(const IntPoly& p, const RatMatrix& m);

}  // namespace ckit
