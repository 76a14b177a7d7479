#pragma once

#include <string>
#include <vector>

#include "ckit/poly.hpp"
#include "ckit/seifert.hpp"

namespace ckit {

/// Finite abelian group Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and d_i > 1.
struct AbelianGroup {
  std::vector<Int> invariant_factors;

  Int order() const;
  /// Whether the group has the form T + T.
  bool is_doubled() const;
  bool operator==(const AbelianGroup& o) const { return invariant_factors == o.invariant_factors; }
  /// "Z/8 + Z/8"; "0" for the trivial group.
  std::string str() const;
};

/// |prod_{i=1}^{p-1} d(zeta_p^i)| = |res(d, Phi_p)|, the order of H_1 of the
/// p-fold branched cover.  Throws InputError when d vanishes at a p-th root
/// of unity.
Int cover_order(const IntPoly& d, unsigned p);

/// H_1 of the p-fold branched cover from the (p-1)-block tridiagonal
/// presentation with V + V^t on the diagonal, -V above and -V^t below.
AbelianGroup cover_homology(const SeifertMatrix& v, unsigned p);

/// Homomorphism to Z/2 given by its values on the generators.
struct Character2 {
  std::vector<int> values;
  bool nontrivial() const;
  std::string str() const;
};

struct CharacterSearchReport {
  AbelianGroup group;
  std::size_t killed = 0;
  Int subgroup_order;
  std::size_t subgroups_total = 0;
  /// Subgroups of the requested order found by generator closure.
  std::size_t subgroups_of_order = 0;
  /// The same number from the partition formula for abelian p-groups.
  std::size_t subgroups_of_order_formula = 0;
  std::size_t counterexamples = 0;
  /// Subgroups settled by each branch of the triangular-generator argument:
  /// first pivot even, first pivot odd with b_1 even, first pivot odd with b_1 odd.
  std::size_t case_a1_even = 0, case_b1_even = 0, case_b1_odd = 0;
  /// Subgroups where the triangular argument's character fails to vanish.
  std::size_t case_failures = 0;
  std::vector<std::pair<std::string, Character2>> examples;

  bool ok() const;
};

/// For every subgroup M of `g` of the given order, search for a nontrivial
/// character to Z/2 vanishing on M and on the last `killed` summands.  All
/// invariant factors must be powers of 2 and |g| <= 4096.
CharacterSearchReport character_search(const AbelianGroup& g, std::size_t killed, const Int& subgroup_order);

/// Character chosen by the triangular-generator argument for the subgroup
/// generated by `gens`: the dual of v_1 when the first pivot is even,
/// otherwise the dual of v_2 or v_1 + v_2 by the parity of b_1.  Requires
/// exactly two summands outside the killed ones.  Throws InternalError when
/// the argument's parity claim fails for this subgroup.
Character2 triangular_character(const AbelianGroup& g, std::size_t killed, const std::vector<std::vector<Int>>& gens);

/// Whether chi vanishes on the subgroup generated by `gens`.
bool vanishes_on(const AbelianGroup& g, const Character2& chi, const std::vector<std::vector<Int>>& gens);

/// Number of subgroups of order p^k in the abelian p-group of type
/// (p^{lambda_1}, p^{lambda_2}, ...).
Int count_subgroups(const std::vector<unsigned>& lambda, unsigned p, unsigned k);

/// N_p(d): the twisted polynomial of the trivial character.
IntPoly twisted_poly_trivial_char(const IntPoly& d, unsigned p);

struct Zeta8Report {
  bool product_matches = false;
  bool first_real = false;
  bool second_real = false;
  bool conjugate_pair = false;
  bool palindromic = false;

  bool ok() const { return product_matches && first_real && second_real && !conjugate_pair && palindromic; }
};

/// Checks t^4 - 8t^3 + 10t^2 - 8t + 1 = (t^2 + (2z - 2z^3 - 4)t + 1)(t^2 + (-2z + 2z^3 - 4)t + 1)
/// in Q(z), z = zeta_8, and that the factors are real rather than conjugate.
Zeta8Report verify_zeta8_factorization();

enum class QuarticGalois { C4, V4, D4, A4, S4 };

std::string to_string(QuarticGalois g);
bool is_abelian(QuarticGalois g);
long group_order(QuarticGalois g);

/// Galois group of an irreducible quartic by the resolvent cubic, the
/// discriminant, and the Kappe-Warren test for C4 versus D4.
QuarticGalois quartic_galois(const IntPoly& p);

/// True when the splitting field of p lies in no abelian extension, in
/// particular in no Q(zeta_{2^r}).  False means only "no obstruction".
bool cyclotomic_embedding_obstruction(const IntPoly& p);

}  // namespace ckit
