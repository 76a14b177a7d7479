#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ckit/cyclotomic.hpp"
#include "ckit/poly.hpp"
#include "oracles.hpp"

using namespace ckit;

namespace {

const IntPoly kQuartic{1, -2, 1, -2, 1};
const IntPoly kCyclo6{1, -1, 1};
const IntPoly kGolden{1, -3, 1};

IntMatrix sylvester(const IntPoly& p, const IntPoly& q) {
  const std::size_t m = static_cast<std::size_t>(p.degree()), n = static_cast<std::size_t>(q.degree());
  IntMatrix s(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s(i, i + j) = p.coeff(m - j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(n + i, i + j) = q.coeff(n - j);
  return s;
}

}  // namespace

TEST_CASE("normalize_alexander shifts and fixes sign") {
  CHECK(normalize_alexander(LaurentPoly{{1, -3, 3, -3, 1}, -2}) == IntPoly{1, -3, 3, -3, 1});
  CHECK(normalize_alexander(LaurentPoly{{-1}, 0}) == IntPoly{1});
  CHECK(normalize_alexander(IntPoly{0, 0, 0, 1, 0, -1}) == IntPoly{1, 0, -1});
  CHECK_THROWS_AS(normalize_alexander(IntPoly{}), InputError);
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(kGolden));
  CHECK_FALSE(is_symmetric(IntPoly{-2, 1}));
  CHECK(is_symmetric(IntPoly{1, -8, 10, -8, 1}));
  CHECK(is_symmetric(IntPoly{-1, 1}));
}

TEST_CASE("factor_rational on knot polynomials") {
  IntPoly d818 = kCyclo6.pow(2) * kGolden;
  auto f = factor_rational(d818);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.find(kCyclo6)->exponent == 2);
  CHECK(f.find(kGolden)->exponent == 1);
  CHECK(f.find(kGolden)->symmetric);

  auto g = factor_rational(kQuartic * kCyclo6.pow(2));
  REQUIRE(g.factors.size() == 2);
  CHECK(g.find(kQuartic)->exponent == 1);
  CHECK(g.find(kCyclo6)->exponent == 2);

  auto h = factor_rational(IntPoly{-1, 0, 1});
  REQUIRE(h.factors.size() == 2);
  CHECK(h.find(IntPoly{-1, 1}));
  CHECK(h.find(IntPoly{1, 1}));
}

TEST_CASE("factor_rational handles content, sign, powers of t and reciprocal pairs") {
  IntPoly p = IntPoly{0, 0, -6} * IntPoly{-1, 2} * IntPoly{2, -1};
  auto f = factor_rational(p);
  CHECK(f.expand() == p);
  CHECK(f.unit == 1);
  CHECK(f.content == 6);
  CHECK(f.t_power == 2);
  REQUIRE(f.factors.size() == 2);
  CHECK_FALSE(f.factors[0].symmetric);
  CHECK(f.factors[0].partner == std::optional<std::size_t>(1));
  CHECK(f.factors[1].partner == std::optional<std::size_t>(0));
}

TEST_CASE("factor_rational on a non-monic input with many modular factors") {
  IntPoly a{3, 0, 5}, b{-7, 2, 0, 3}, c{1, 1, 1, 1, 1};
  auto f = factor_rational(a * b * c.pow(2) * IntPoly{5, -4});
  CHECK(f.expand() == a * b * c.pow(2) * IntPoly{5, -4});
  CHECK(f.factors.size() == 4);
  CHECK(f.find(c)->exponent == 2);
  // Swinnerton-Dyer polynomial: irreducible, splits into quadratics mod every prime.
  IntPoly sd{1, 0, -10, 0, 1};
  CHECK(factor_rational(sd).factors.size() == 1);
  CHECK(factor_rational(sd * IntPoly{1, 0, -2}).factors.size() == 2);
}

TEST_CASE("fox_milnor_form") {
  IntPoly d62{1, -3, 3, -3, 1};
  CHECK(fox_milnor_form(d62.pow(2)));
  CHECK_FALSE(fox_milnor_form(d62));
  CHECK(fox_milnor_form(IntPoly{-1, 2, 1} * IntPoly{-1, -2, 1} * IntPoly{-1, 1}.pow(2)));
}

TEST_CASE("min_concordant_degree") {
  IntPoly d818 = kCyclo6.pow(2) * kGolden;
  CHECK(min_concordant_degree(d818, {kCyclo6}) == 6);
  CHECK(min_concordant_degree(kQuartic * kCyclo6.pow(2), {}) == 4);
  CHECK(min_concordant_degree(kCyclo6, {}) == 2);
  CHECK_THROWS_AS(min_concordant_degree(kGolden, {kCyclo6}), InputError);
}

TEST_CASE("resultant and discriminant") {
  CHECK(resultant(IntPoly{-3, 1}, IntPoly{-5, 1}) == -2);
  CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{-1, 0, 1}) == 4);
  Int r = resultant(kQuartic, kQuartic.derivative());
  CHECK(r == oracle::det_expand(sylvester(kQuartic, kQuartic.derivative())));
  CHECK(discriminant(IntPoly{3, 2, 1}) == -8);
  CHECK(discriminant(kCyclo6) == -3);
  CHECK(discriminant(kQuartic) == -448);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(6) == kCyclo6);
  CHECK(cyclotomic(8) == IntPoly{1, 0, 0, 0, 1});
  CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
}

TEST_CASE("eval_cyclotomic") {
  CycloElement z3 = CycloElement::zeta(3);
  CHECK(eval_cyclotomic(kCyclo6, 3) == z3 * CycloElement(3, Rat(-2)));
  CHECK(eval_cyclotomic(IntPoly{1}, 7) == CycloElement(7, Rat(1)));
  CHECK(eval_cyclotomic(kQuartic, 3) == CycloElement(3, Rat(-2)) - z3 * CycloElement(3, Rat(2)));
  CHECK(CycloElement::zeta(8).conj().conj() == CycloElement::zeta(8));
  CHECK(CycloElement::zeta(5) * CycloElement::zeta(5).conj() == CycloElement(5, Rat(1)));
}

TEST_CASE("norm_np") {
  CHECK(norm_np(kQuartic, 3) == IntPoly{1, -8, 10, -8, 1});
  CHECK(norm_np(IntPoly{1}, 5) == IntPoly{1});
  IntPoly n2 = norm_np(IntPoly{-1, 1}, 2);
  CHECK((n2 == IntPoly{-1, 1} || n2 == IntPoly{1, -1}));
}

TEST_CASE("trace_polynomial") {
  CHECK(trace_polynomial(kQuartic) == IntPoly{-1, -2, 1});
  CHECK(trace_polynomial(kCyclo6) == IntPoly{-1, 1});
  CHECK_THROWS_AS(trace_polynomial(IntPoly{1, 2, 3}), InputError);
}

TEST_CASE("Sturm root counting and isolation") {
  RatPoly p(IntPoly{-2, 0, 1});  // roots +-sqrt(2)
  CHECK(count_roots(p, Rat(-2), Rat(2)) == 2);
  CHECK(count_roots(p, Rat(0), Rat(2)) == 1);
  auto iv = isolate_real_roots(p, Rat(-2), Rat(2), Rat(1, 100));
  REQUIRE(iv.size() == 2);
  CHECK(iv[0].first < iv[0].second);
  CHECK(iv[0].second < iv[1].first + Rat(1, 1000000));
  for (auto& [a, b] : iv) {
    CHECK(b - a <= Rat(1, 100));
    CHECK(sgn(p.eval(a)) * sgn(p.eval(b)) <= 0);
  }
  RatPoly q(IntPoly{0, -1, 0, 1});  // roots -1, 0, 1; endpoints excluded
  CHECK(isolate_real_roots(q, Rat(-1), Rat(1), Rat(1, 4)).size() == 1);
}

TEST_CASE("char_poly and eval_matrix") {
  RatMatrix m{{Rat(0), Rat(-1)}, {Rat(1), Rat(1)}};
  CHECK(char_poly(m) == RatPoly(kCyclo6));
  RatMatrix z = eval_matrix(kCyclo6, m);
  CHECK(z == RatMatrix(2, 2));
}

// ---------------------------------------------------------------- properties

TEST_CASE("property: normalize_alexander idempotent and multiplicative up to unit") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    IntPoly p = oracle::random_poly(rng, 1 + i % 4, 4) * IntPoly::monomial(i % 3);
    IntPoly q = oracle::random_poly(rng, 1 + i % 3, 4);
    IntPoly np = normalize_alexander(p);
    CHECK(normalize_alexander(np) == np);
    IntPoly lhs = normalize_alexander(p * q);
    IntPoly rhs = np * normalize_alexander(q);
    CHECK((lhs == rhs || lhs == -rhs));
  }
}

TEST_CASE("property: factor_rational round trip with Kronecker irreducibility oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    IntPoly p = oracle::random_poly(rng, 1 + i % 3, 3);
    int parts = 1 + i % 3;
    for (int k = 0; k < parts; ++k) p = p * oracle::random_poly(rng, 1 + (i + k) % 3, 3);
    if (p.degree() > 8) continue;
    auto f = factor_rational(p);
    CHECK(f.expand() == p);
    for (auto& x : f.factors) {
      CHECK(x.poly.content() == 1);
      CHECK(x.poly.lead() > 0);
      CHECK(x.symmetric == is_symmetric(x.poly));
      CHECK_FALSE(oracle::has_small_divisor(x.poly, 2));
    }
  }
}

TEST_CASE("property: fox_milnor_form(p * reverse(p))") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    IntPoly p = oracle::random_poly(rng, i % 6, 5);
    if (p.coeff(0) == 0) p = p + IntPoly{1};
    CHECK(fox_milnor_form(p * p.reversed()));
  }
}

TEST_CASE("property: resultant vanishes iff common factor") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    IntPoly p = oracle::random_poly(rng, 1 + i % 3, 2);
    IntPoly q = oracle::random_poly(rng, 1 + (i / 3) % 3, 2);
    if (i % 4 == 0) q = q * p;
    bool common = gcd(p, q).degree() > 0;
    CHECK((resultant(p, q) == 0) == common);
  }
}

TEST_CASE("property: norm_np roots are prime powers of roots (floating oracle)") {
  std::mt19937_64 rng(9);
  const mpf_class tol("1e-60", 256);
  int checked = 0;
  for (int i = 0; checked < 12 && i < 100; ++i) {
    IntPoly p = oracle::random_poly(rng, 4, 4);
    if (p.coeff(0) == 0 || discriminant(p) == 0) continue;
    unsigned q = (i % 2 == 0) ? 3 : 5;
    IntPoly n = norm_np(p, q);
    REQUIRE(n.degree() == p.degree());
    if (discriminant(n) == 0) continue;
    ++checked;
    auto rp = oracle::roots(p);
    auto rn = oracle::roots(n);
    for (auto& r : rp) {
      oracle::Complex pw(1, 0);
      for (unsigned k = 0; k < q; ++k) pw = pw * r;
      bool matched = false;
      for (auto& s : rn)
        if ((pw - s).abs2() < tol) matched = true;
      CHECK(matched);
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("property: cyclotomic norm is a rational integer, positive at n=3") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    IntPoly p = oracle::random_poly(rng, 1 + i % 5, 4);
    for (unsigned n : {3u, 5u, 8u}) {
      Rat nm = eval_cyclotomic(p, n).norm();
      CHECK(nm.get_den() == 1);
      if (n == 3 && nm != 0) CHECK(nm > 0);
    }
  }
}
