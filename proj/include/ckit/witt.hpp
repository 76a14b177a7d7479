#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckit/matrix.hpp"

namespace ckit {

/// Diagonal form <a_1, ..., a_n> with nonzero square-free integer entries.
struct DiagonalForm {
  std::vector<Int> entries;

  std::size_t rank() const { return entries.size(); }
  long signature() const;
  /// Product of the entries.
  Int discriminant() const;
  DiagonalForm operator-() const;
  /// Orthogonal sum.
  DiagonalForm operator+(const DiagonalForm& o) const;
  bool operator==(const DiagonalForm& o) const { return entries == o.entries; }
  std::string str() const;
};

/// Form over Z/p with entries in (Z/p)^*, p odd.
struct FiniteWittClass {
  Int p;
  std::vector<Int> entries;

  std::size_t rank() const { return entries.size(); }
  /// Legendre symbol of the product of the entries (1 for rank 0).
  int disc_class() const;
  std::string str() const;
};

constexpr long kRealPlace = 0;

/// Congruence diagonalization of a symmetric matrix over Q.  Zero entries
/// are kept for degenerate input.
std::vector<Rat> congruence_diagonal(const RatMatrix& q);

/// Signature of a symmetric rational matrix.
long signature(const RatMatrix& q);

/// Square-free diagonal form Witt-equivalent (in fact isometric) to q.
/// Throws InputError("degenerate form") on singular or non-symmetric input.
DiagonalForm diagonalize(const RatMatrix& q);

/// Repeatedly delete pairs {a, -a}; entries sorted.
DiagonalForm cancel_hyperbolic(const DiagonalForm& d);

/// Entries divisible by p, divided by p, reduced mod p.
FiniteWittClass boundary_p(const DiagonalForm& d, const Int& p);
/// Entries prime to p, reduced mod p.
FiniteWittClass boundary_p_unit(const DiagonalForm& d, const Int& p);

/// Split in W(Z/p): even rank and disc = (-1)^{rank/2} up to squares.
bool finite_trivial(const FiniteWittClass& c);

/// Basis of a totally isotropic subspace of half rank, by exhaustive search
/// (small rank and p only).  nullopt when none exists.
std::optional<std::vector<std::vector<Int>>> find_metabolizer(const FiniteWittClass& c);

bool is_square_qp(const Int& n, const Int& p);
bool is_square_qp(const Rat& q, const Int& p);

/// Hilbert symbol (a, b)_p; p = kRealPlace for the real place.
int hilbert_symbol(const Int& a, const Int& b, const Int& p);

/// Product of (a_i, a_j)_p over i < j.
int hasse_invariant(const DiagonalForm& d, const Int& p);

/// Witt triviality over Q_p.
bool trivial_over_qp(const DiagonalForm& d, const Int& p);

/// Witt triviality over Q (signature, odd boundaries, and the 2-adic place).
bool trivial_over_q(const DiagonalForm& d);

}  // namespace ckit
