#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckit/poly.hpp"
#include "ckit/seifert.hpp"
#include "ckit/structure.hpp"
#include "ckit/witt.hpp"

namespace ckit {

/// Restriction of a structure to the subspace killed by delta(T)^exponent.
struct DeltaComponent {
  IntPoly delta;
  unsigned exponent = 0;
  IsometricStructure structure;
  /// Columns span the component inside the ambient space.
  RatMatrix basis;
};

struct Decomposition {
  std::vector<DeltaComponent> components;
  /// Dimension of the part belonging to non-symmetric factor pairs; such
  /// parts are metabolic and carry no Witt class.
  std::size_t paired_dim = 0;
};

enum class Verdict { trivial, nontrivial, undetermined };

struct TriState {
  Verdict value = Verdict::undetermined;
  std::string witness;

  bool trivial() const { return value == Verdict::trivial; }
  bool nontrivial() const { return value == Verdict::nontrivial; }
};

std::string to_string(Verdict v);

/// Characteristic polynomial of T (monic).
RatPoly char_poly(const IsometricStructure& s);

/// One component per irreducible symmetric factor of char_poly, computed as
/// the image of the complementary factors and cross-checked against the
/// kernel of delta(T)^k.  Components are sorted by delta.
Decomposition decompose(const IsometricStructure& s);

/// Sorted primes of det Q (numerator and denominator) and of the
/// discriminant of the squarefree part of char_poly, always including 2.
std::vector<Int> relevant_primes(const IsometricStructure& s);

/// Witt triviality of one component: real place, exponent parity, then a
/// local decision at each relevant prime.
TriState component_trivial(const DeltaComponent& c);
/// Same, also deciding the local class at `extra_primes` (the primes of an
/// ambient class).
TriState component_trivial(const DeltaComponent& c, const std::vector<Int>& extra_primes);

/// For a quartic delta whose trace polynomial splits over Q_p: Q_p classes
/// of the form on the two eigenspaces of T + T^{-1}.
std::optional<std::pair<DiagonalForm, DiagonalForm>> qp_eigen_split(const DeltaComponent& c, const Int& p);

TriState witt_trivial(const IsometricStructure& s);

struct SeifertRecovery {
  enum class Kind { seifert, integral_non_seifert, nonintegral };
  Kind kind;
  RatMatrix V;
};

/// Q (1 + T)^{-1}; throws InputError when 1 + T is singular.
SeifertRecovery seifert_from(const IsometricStructure& s);

/// (2Q, T).
IsometricStructure scale_by_two(const IsometricStructure& s);

/// Witt triviality of structure(V1) + (-structure(V2)) after passing to
/// invertible representatives.
TriState alg_concordant(const SeifertMatrix& v1, const SeifertMatrix& v2);

}  // namespace ckit
