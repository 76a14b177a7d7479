#include "ckit/arith.hpp"

#include <algorithm>

namespace ckit {

namespace {

// Pollard-Brent rho; only reached for cofactors with no prime below 10^5.
Int rho_split(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto f = [&](const Int& v) { return mod(v * v + c, n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Int diff = x - y;
      d = gcd(abs(diff), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = rho_split(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Int, long> factor_integer(const Int& n_in) {
  CKIT_ASSERT(n_in != 0, "factor_integer(0)");
  std::map<Int, long> out;
  Int n = abs(n_in);
  for (unsigned long p = 2; p < 100000 && n > 1; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * Int(p) > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Int(p)] += 1;
      n /= p;
    }
  }
  if (n > 1) factor_into(n, out);
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> ps;
  for (auto& [p, e] : factor_integer(n)) ps.push_back(p);
  return ps;
}

Int squarefree_part(const Int& n) {
  CKIT_ASSERT(n != 0, "squarefree_part(0)");
  Int s = n < 0 ? -1 : 1;
  for (auto& [p, e] : factor_integer(n))
    if (e % 2) s *= p;
  return s;
}

Int squarefree_part(const Rat& q) {
  // q = a/b is in the square class of a*b.
  return squarefree_part(Int(q.get_num() * q.get_den()));
}

std::string to_string(const Int& n) { return n.get_str(); }
std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace ckit
