#pragma once

// Polynomials over Z/pZ and Z/p^kZ: modular factorization and Hensel lifting.
// Shared by the rational factorizer and the p-adic Witt machinery.

#include <cstdint>
#include <utility>
#include <vector>

#include "ckit/poly.hpp"

namespace ckit::modp {

/// Coefficients in [0, p), lowest degree first, trimmed.
using ModPoly = std::vector<std::int64_t>;

ModPoly reduce(const IntPoly& f, std::int64_t p);
IntPoly lift(const ModPoly& f);

long degree(const ModPoly& f);
ModPoly add(const ModPoly& a, const ModPoly& b, std::int64_t p);
ModPoly sub(const ModPoly& a, const ModPoly& b, std::int64_t p);
ModPoly mul(const ModPoly& a, const ModPoly& b, std::int64_t p);
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b, std::int64_t p);
ModPoly monic(const ModPoly& a, std::int64_t p);
ModPoly gcd(ModPoly a, ModPoly b, std::int64_t p);
/// s, t with s a + t b = gcd(a, b) (monic).
void ext_gcd(const ModPoly& a, const ModPoly& b, std::int64_t p, ModPoly& g, ModPoly& s, ModPoly& t);

/// Monic irreducible factors with multiplicity of a nonzero polynomial
/// (leading coefficient discarded), sorted canonically.
std::vector<std::pair<ModPoly, unsigned>> factor(const ModPoly& f, std::int64_t p);

bool is_squarefree(const ModPoly& f, std::int64_t p);

}  // namespace ckit::modp

namespace ckit::hensel {

/// Reduce coefficients into [0, m).
IntPoly reduce(const IntPoly& f, const Int& m);
/// Symmetric representatives in (-m/2, m/2].
IntPoly symmetric(const IntPoly& f, const Int& m);
/// Division by a monic polynomial over Z/m.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b, const Int& m);

/// Lift monic f = prod factors (mod p), factors monic and pairwise coprime
/// mod p, to a factorization modulo p^k.  Returned factors are monic with
/// coefficients in [0, p^k), in the input order.
std::vector<IntPoly> lift(const IntPoly& f, const std::vector<IntPoly>& factors, const Int& p,
                          unsigned k);

}  // namespace ckit::hensel
