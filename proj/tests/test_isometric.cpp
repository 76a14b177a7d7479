#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ckit/isometric.hpp"
#include "ckit/linalg.hpp"
#include "ckit/witt.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ckit;

namespace {

const IntPoly kQuartic{1, -2, 1, -2, 1};
const IntPoly kCyclo6{1, -1, 1};
const IntPoly kGolden{1, -3, 1};

IsometricStructure structure_of(const SeifertMatrix& s) { return isometric_structure(invertible_representative(s)); }
IsometricStructure structure_of(const std::string& knot) { return structure_of(fixtures::knot(knot)); }

IsometricStructure v2_structure() { return isometric_structure(validate(fixtures::form("v2_1082_quartic"))); }

IsometricStructure paper_quartic() {
  return {to_rat(fixtures::form("q_1082_quartic")), to_rat(fixtures::form("t_1082_quartic"))};
}

const DeltaComponent& component(const Decomposition& d, const IntPoly& delta) {
  for (auto& c : d.components)
    if (c.delta == delta) return c;
  throw std::runtime_error("no component at " + delta.str());
}

// Primes by trial division.
std::vector<Int> trial_primes(Int n) {
  std::vector<Int> out;
  n = abs(n);
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<IsometricStructure> fixture_structures() {
  std::vector<IsometricStructure> out;
  for (auto& k : fixtures::knots())
    if (k.seifert.size() > 0) out.push_back(structure_of(k.seifert));
  out.push_back(paper_quartic());
  return out;
}

// Rank, signature and discriminant class of a nonsingular form.
struct Invariants {
  std::size_t rank;
  long sig;
  Int disc;
  bool operator==(const Invariants&) const = default;
};

Invariants invariants(const RatMatrix& q) {
  return {q.rows(), signature(q), squarefree_part(det(q))};
}

}  // namespace

TEST_CASE("char_poly") {
  CHECK(char_poly(v2_structure()) == RatPoly(kQuartic));
  CHECK(char_poly(structure_of("8_18")).to_primitive() == kCyclo6.pow(2) * kGolden);
  IsometricStructure id{RatMatrix{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}}, RatMatrix::identity(2)};
  CHECK(char_poly(id) == RatPoly(IntPoly{1, -2, 1}));
}

TEST_CASE("decompose") {
  auto d818 = decompose(structure_of("8_18"));
  REQUIRE(d818.components.size() == 2);
  CHECK(component(d818, kCyclo6).structure.dim() == 4);
  CHECK(component(d818, kCyclo6).exponent == 2);
  CHECK(component(d818, kGolden).structure.dim() == 2);

  auto d1082 = decompose(structure_of("10_82"));
  REQUIRE(d1082.components.size() == 2);
  CHECK(component(d1082, kCyclo6).structure.dim() == 4);
  const auto& quartic = component(d1082, kQuartic);
  CHECK(quartic.structure.dim() == 4);
  IsometricStructure paper = paper_quartic();
  CHECK(char_poly(quartic.structure) == char_poly(paper));
  CHECK(trivial_over_q(diagonalize(quartic.structure.Q) + (-diagonalize(paper.Q))));

  IsometricStructure v2 = v2_structure();
  auto dv2 = decompose(v2);
  REQUIRE(dv2.components.size() == 1);
  CHECK(dv2.components[0].structure.Q == v2.Q);
  CHECK(dv2.components[0].structure.T == v2.T);
  CHECK(dv2.paired_dim == 0);
}

TEST_CASE("decompose reports non-symmetric pairs") {
  // T = diag(2, 1/2) preserves the hyperbolic plane.
  IsometricStructure h{RatMatrix{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}},
                       RatMatrix{{Rat(2), Rat(0)}, {Rat(0), Rat(1, 2)}}};
  auto d = decompose(h);
  CHECK(d.components.empty());
  CHECK(d.paired_dim == 2);
  CHECK(witt_trivial(h).trivial());
  CHECK(witt_trivial(block_sum(h, v2_structure())).nontrivial());
}

TEST_CASE("component_trivial on fixtures") {
  auto r1082 = component_trivial(component(decompose(structure_of("10_82")), kCyclo6));
  CHECK(r1082.trivial());

  auto r818 = component_trivial(component(decompose(structure_of("8_18")), kCyclo6));
  CHECK(r818.nontrivial());
  CHECK(r818.witness.find("boundary at 3") != std::string::npos);

  auto r940 = component_trivial(component(decompose(structure_of("9_40")), kGolden));
  CHECK(r940.nontrivial());
  CHECK(r940.witness.find("at 5") != std::string::npos);

  auto real = component_trivial(component(decompose(structure_of("10_82")), kQuartic));
  CHECK(real.nontrivial());
  CHECK(real.witness.find("real place") != std::string::npos);

  auto odd = component_trivial(component(decompose(structure_of("8_18")), kGolden));
  CHECK(odd.nontrivial());
  CHECK(odd.witness.find("odd exponent 1") != std::string::npos);
}

TEST_CASE("relevant_primes") {
  IsometricStructure w = block_sum(structure_of("10_82"), -v2_structure());
  CHECK(relevant_primes(w) == std::vector<Int>{2, 3, 7});
  CHECK(relevant_primes(block_sum(paper_quartic(), -v2_structure())) == std::vector<Int>{2, 7});
  IsometricStructure hyp{RatMatrix{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}, RatMatrix::identity(2)};
  CHECK(relevant_primes(hyp) == std::vector<Int>{2});
  IsometricStructure v2 = v2_structure();
  Rat dq = oracle::det_expand(v2.Q);
  std::vector<Int> expect{Int(2)};
  for (const Int& n : {dq.get_num(), dq.get_den(), discriminant(kQuartic)})
    for (auto& p : trial_primes(n)) expect.push_back(p);
  std::sort(expect.begin(), expect.end());
  expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
  CHECK(relevant_primes(v2) == expect);
}

TEST_CASE("witt_trivial") {
  IsometricStructure v2 = v2_structure();
  CHECK(witt_trivial(block_sum(v2, -v2)).trivial());
  CHECK(witt_trivial(block_sum(structure_of("10_82"), -scale_by_two(v2))).trivial());
  CHECK(witt_trivial(block_sum(paper_quartic(), -v2)).trivial());
  CHECK(witt_trivial(structure_of("8_18")).nontrivial());
  CHECK(witt_trivial(IsometricStructure{}).trivial());
}

TEST_CASE("seifert_from") {
  SeifertRecovery r = seifert_from(paper_quartic());
  CHECK(r.kind == SeifertRecovery::Kind::integral_non_seifert);
  CHECK(r.V == to_rat(fixtures::form("v_1082_quartic")));
  IsometricStructure half{paper_quartic().Q.scaled(Rat(1, 2)), paper_quartic().T};
  SeifertRecovery h = seifert_from(half);
  CHECK(h.kind == SeifertRecovery::Kind::seifert);
  CHECK(h.V == to_rat(fixtures::form("v2_1082_quartic")));
  CHECK(seifert_from(structure_of("6_2")).V == to_rat(fixtures::knot("6_2").V));
  IsometricStructure third{paper_quartic().Q.scaled(Rat(1, 3)), paper_quartic().T};
  CHECK(seifert_from(third).kind == SeifertRecovery::Kind::nonintegral);
  IsometricStructure flip{RatMatrix{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, RatMatrix{{Rat(-1), Rat(0)}, {Rat(0), Rat(1)}}};
  CHECK_THROWS_AS(seifert_from(flip), InputError);
}

TEST_CASE("scale_by_two") {
  IsometricStructure v2 = v2_structure();
  CHECK(witt_trivial(block_sum(scale_by_two(scale_by_two(v2)), -v2)).trivial());
  CHECK(witt_trivial(block_sum(scale_by_two(v2), -v2)).trivial());
  IsometricStructure k = structure_of("6_2");
  CHECK(signature(scale_by_two(k).Q) == signature(k.Q));
  CHECK(signature(k.Q) != 0);
}

TEST_CASE("alg_concordant") {
  SeifertMatrix k1082 = fixtures::knot("10_82");
  CHECK(alg_concordant(k1082, k1082).trivial());
  CHECK(alg_concordant(k1082, mirror(fixtures::knot("9_42"))).trivial());
  SeifertMatrix hyp = validate(IntMatrix{{Int(0), Int(1)}, {Int(0), Int(0)}});
  CHECK(alg_concordant(fixtures::knot("8_18"), hyp).nontrivial());
  CHECK(alg_concordant(fixtures::knot("10_82_quartic_rep"), validate(fixtures::form("v2_1082_quartic"))).value !=
        Verdict::undetermined);
}

// ---------------------------------------------------------------- properties

TEST_CASE("property: decompositions preserve the form and fill the space") {
  std::mt19937_64 rng(51);
  auto structures = fixture_structures();
  for (int i = 0; i < 12; ++i) {
    SeifertMatrix s = validate(oracle::random_seifert(rng, 1 + i % 3, 2));
    if (det(s.V) != 0) structures.push_back(isometric_structure(s));
  }
  for (auto& s : structures) {
    auto d = decompose(s);
    std::size_t dim = d.paired_dim;
    RatMatrix basis(s.dim(), 0);
    for (auto& c : d.components) {
      dim += c.structure.dim();
      CHECK(c.structure.dim() == c.exponent * static_cast<std::size_t>(c.delta.degree()));
      CHECK(char_poly(c.structure).to_primitive() == c.delta.pow(c.exponent));
      CHECK(char_poly(s).to_primitive().exact_div(c.delta).has_value());
    }
    CHECK(dim == s.dim());
    if (d.paired_dim == 0) {
      RatMatrix q(0, 0);
      for (auto& c : d.components) q = block_sum(q, c.structure.Q);
      CHECK(invariants(q) == invariants(s.Q));
    }
  }
}

TEST_CASE("property: S + (-S) is trivial and components cancel") {
  for (auto& s : fixture_structures()) {
    CHECK(witt_trivial(block_sum(s, -s)).trivial());
    auto a = decompose(s);
    auto b = decompose(-s);
    for (auto& c : a.components) {
      const DeltaComponent& m = component(b, c.delta);
      DeltaComponent sum{c.delta, c.exponent + m.exponent, block_sum(c.structure, m.structure),
                         RatMatrix::identity(2 * c.structure.dim())};
      CHECK(component_trivial(sum).trivial());
    }
  }
}

TEST_CASE("property: seifert_from inverts isometric_structure") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 25; ++i) {
    SeifertMatrix s = validate(oracle::random_seifert(rng, 1 + i % 3, 3));
    if (det(s.V) == 0) continue;
    SeifertRecovery r = seifert_from(isometric_structure(s));
    CHECK(r.kind == SeifertRecovery::Kind::seifert);
    CHECK(r.V == to_rat(s.V));
  }
}

TEST_CASE("property: scale_by_two is an involution on Witt classes") {
  for (auto& s : fixture_structures()) {
    IsometricStructure t = scale_by_two(s);
    CHECK(signature(t.Q) == signature(s.Q));
    auto a = decompose(s), b = decompose(t);
    REQUIRE(a.components.size() == b.components.size());
    for (std::size_t i = 0; i < a.components.size(); ++i)
      CHECK(a.components[i].structure.dim() == b.components[i].structure.dim());
    CHECK(witt_trivial(block_sum(scale_by_two(t), -s)).trivial());
  }
}

TEST_CASE("property: local verdicts agree with the whole-form test") {
  // When every component is trivial the total form is trivial at each place.
  std::mt19937_64 rng(53);
  std::vector<IsometricStructure> cases{block_sum(paper_quartic(), -v2_structure())};
  for (int i = 0; i < 6; ++i) {
    SeifertMatrix s = validate(oracle::random_seifert(rng, 2, 2));
    if (det(s.V) == 0) continue;
    IsometricStructure st = isometric_structure(s);
    cases.push_back(block_sum(st, -scale_by_two(st)));
    cases.push_back(block_sum(st, -st));
  }
  for (auto& s : cases) {
    TriState r = witt_trivial(s);
    if (r.trivial()) CHECK(trivial_over_q(diagonalize(s.Q)));
    if (!trivial_over_q(diagonalize(s.Q))) CHECK(r.nontrivial());
  }
}

TEST_CASE("property: Q_p eigen-splits add up to the whole form") {
  std::mt19937_64 rng(54);
  std::vector<DeltaComponent> comps;
  for (auto& s : fixture_structures())
    for (auto& c : decompose(s).components) comps.push_back(c);
  for (int i = 0; i < 40 && comps.size() < 40; ++i) {
    SeifertMatrix s = validate(oracle::random_seifert(rng, 2, 2));
    if (det(s.V) == 0) continue;
    for (auto& c : decompose(isometric_structure(s)).components) comps.push_back(c);
  }
  std::size_t checked = 0;
  for (auto& c : comps) {
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
      auto split = qp_eigen_split(c, Int(p));
      if (!split) continue;
      ++checked;
      CHECK(split->first.rank() == split->second.rank());
      CHECK(trivial_over_qp(split->first + split->second + (-diagonalize(c.structure.Q)), Int(p)));
    }
  }
  CHECK(checked >= 5);
}
