#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckit {

using Int = mpz_class;
using Rat = mpq_class;

/// Bad user input: malformed files, matrices that violate a precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation reached a state its own invariants rule out.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define CKIT_ASSERT(cond, msg)                                            \
  do {                                                                    \
    if (!(cond)) throw ::ckit::InternalError(std::string("internal: ") + \
                                             (msg));                      \
  } while (0)

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Non-negative remainder.
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline long mod_small(const Int& a, long m) {
  Int r = mod(a, Int(m));
  return r.get_si();
}

inline Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// Modular inverse; throws if not invertible.
inline Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw InternalError("inv_mod: not invertible");
  return r;
}

/// p-adic valuation of a nonzero integer.
inline long valuation(Int n, const Int& p) {
  CKIT_ASSERT(n != 0, "valuation of zero");
  long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

inline long valuation(const Rat& q, const Int& p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_rational_square(const Rat& q) {
  return q >= 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

inline bool is_prime(const Int& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

/// Legendre symbol (a/p) for odd prime p; 0 when p | a.
inline int legendre(const Int& a, const Int& p) {
  return mpz_legendre(mod(a, p).get_mpz_t(), p.get_mpz_t());
}

/// Prime factorization of |n| (n != 0) as prime -> exponent.
std::map<Int, long> factor_integer(const Int& n);

/// Sorted primes dividing |n|.
std::vector<Int> prime_divisors(const Int& n);

/// Square-free part with sign: n = s * m^2, s square-free.
Int squarefree_part(const Int& n);

/// Square-free integer representative of the square class of q.
Int squarefree_part(const Rat& q);

std::string to_string(const Int& n);
std::string to_string(const Rat& q);

}  // namespace ckit
