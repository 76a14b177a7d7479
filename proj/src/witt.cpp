#include "ckit/witt.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ckit/linalg.hpp"

namespace ckit {

long DiagonalForm::signature() const {
  long s = 0;
  for (auto& a : entries) s += sgn(a);
  return s;
}

Int DiagonalForm::discriminant() const {
  Int d = 1;
  for (auto& a : entries) d *= a;
  return d;
}

DiagonalForm DiagonalForm::operator-() const {
  DiagonalForm r = *this;
  for (auto& a : r.entries) a = -a;
  return r;
}

DiagonalForm DiagonalForm::operator+(const DiagonalForm& o) const {
  DiagonalForm r = *this;
  r.entries.insert(r.entries.end(), o.entries.begin(), o.entries.end());
  return r;
}

std::string DiagonalForm::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i].get_str();
  os << ")";
  return os.str();
}

int FiniteWittClass::disc_class() const {
  Int d = 1;
  for (auto& a : entries) d *= a;
  return legendre(d, p);
}

std::string FiniteWittClass::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i].get_str();
  os << ") in W(Z/" << p.get_str() << "Z)";
  return os.str();
}

std::vector<Rat> congruence_diagonal(const RatMatrix& q_in) {
  CKIT_ASSERT(q_in.square() && q_in.is_symmetric(), "congruence_diagonal needs a symmetric matrix");
  RatMatrix q = q_in;
  const std::size_t n = q.rows();
  auto swap_both = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(q(a, j), q(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(q(i, a), q(i, b));
  };
  std::vector<Rat> diag;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && q(piv, piv) == 0) ++piv;
    if (piv == n) {
      // No nonzero diagonal entry: add a row/column with an off-diagonal hit.
      std::size_t j = n;
      for (std::size_t c = k + 1; c < n && j == n; ++c)
        if (q(k, c) != 0) j = c;
      for (std::size_t r = k + 1; r < n && j == n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (q(r, c) != 0) {
            swap_both(k, r);
            j = c;
            break;
          }
      if (j == n) {
        diag.push_back(0);
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) q(k, c) += q(j, c);
      for (std::size_t r = 0; r < n; ++r) q(r, k) += q(r, j);
      piv = k;
    }
    if (piv != k) swap_both(k, piv);
    const Rat a = q(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (q(i, k) == 0) continue;
      Rat f = q(i, k) / a;
      for (std::size_t j = k; j < n; ++j) q(i, j) -= f * q(k, j);
      for (std::size_t j = k; j < n; ++j) q(j, i) = q(i, j);
    }
    diag.push_back(a);
  }
  return diag;
}

long signature(const RatMatrix& q) {
  long s = 0;
  for (auto& a : congruence_diagonal(q)) s += sgn(a);
  return s;
}

DiagonalForm diagonalize(const RatMatrix& q) {
  if (!q.square() || !q.is_symmetric()) throw InputError("degenerate form: not symmetric");
  DiagonalForm d;
  for (auto& a : congruence_diagonal(q)) {
    if (a == 0) throw InputError("degenerate form");
    d.entries.push_back(squarefree_part(a));
  }
  return d;
}

DiagonalForm cancel_hyperbolic(const DiagonalForm& d) {
  std::vector<Int> e = d.entries;
  std::vector<bool> gone(e.size(), false);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (gone[i]) continue;
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (!gone[j] && e[j] == -e[i]) {
        gone[i] = gone[j] = true;
        break;
      }
  }
  DiagonalForm r;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!gone[i]) r.entries.push_back(e[i]);
  std::sort(r.entries.begin(), r.entries.end());
  return r;
}

FiniteWittClass boundary_p(const DiagonalForm& d, const Int& p) {
  CKIT_ASSERT(p > 2 && is_prime(p), "boundary_p needs an odd prime");
  FiniteWittClass c{p, {}};
  for (auto& a : d.entries)
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) c.entries.push_back(mod(a / p, p));
  return c;
}

FiniteWittClass boundary_p_unit(const DiagonalForm& d, const Int& p) {
  CKIT_ASSERT(p > 2 && is_prime(p), "boundary_p_unit needs an odd prime");
  FiniteWittClass c{p, {}};
  for (auto& a : d.entries)
    if (!mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) c.entries.push_back(mod(a, p));
  return c;
}

bool finite_trivial(const FiniteWittClass& c) {
  const std::size_t r = c.rank();
  if (r % 2 != 0) return false;
  Int d = (r / 2) % 2 == 0 ? 1 : -1;
  for (auto& a : c.entries) d *= a;
  return legendre(d, c.p) == 1;
}

std::optional<std::vector<std::vector<Int>>> find_metabolizer(const FiniteWittClass& c) {
  const std::size_t r = c.rank();
  if (r % 2 != 0) return std::nullopt;
  if (r == 0) return std::vector<std::vector<Int>>{};
  const long p = c.p.get_si();
  long total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    total *= p;
    CKIT_ASSERT(total <= 2000000, "find_metabolizer: search space too large");
  }
  auto vec = [&](long code) {
    std::vector<long> v(r);
    for (std::size_t i = 0; i < r; ++i) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  };
  auto form = [&](const std::vector<long>& x, const std::vector<long>& y) {
    long s = 0;
    for (std::size_t i = 0; i < r; ++i) s = (s + c.entries[i].get_si() * x[i] % p * y[i]) % p;
    return s;
  };
  // Isotropic vectors normalized to leading coordinate 1.
  std::vector<std::vector<long>> iso;
  for (long code = 1; code < total; ++code) {
    auto v = vec(code);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    if (form(v, v) == 0) iso.push_back(v);
  }
  auto independent = [&](std::vector<std::vector<long>> rows) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < r && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[rank], rows[piv]);
      long inv = inv_mod(Int(rows[rank][col]), Int(p)).get_si();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank || rows[i][col] == 0) continue;
        long f = rows[i][col] * inv % p;
        for (std::size_t j = 0; j < r; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
      }
      ++rank;
    }
    return rank == rows.size();
  };
  std::vector<std::vector<long>> chosen;
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    if (chosen.size() == r / 2) return true;
    for (std::size_t i = start; i < iso.size(); ++i) {
      bool ok = true;
      for (auto& w : chosen)
        if (form(w, iso[i]) != 0) ok = false;
      if (!ok) continue;
      chosen.push_back(iso[i]);
      if (independent(chosen) && dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  std::vector<std::vector<Int>> out;
  for (auto& v : chosen) {
    std::vector<Int> w;
    for (long x : v) w.emplace_back(x);
    out.push_back(w);
  }
  return out;
}

bool is_square_qp(const Int& n, const Int& p) {
  CKIT_ASSERT(n != 0, "is_square_qp(0)");
  long v = valuation(n, p);
  if (v % 2 != 0) return false;
  Int u = n / pow_int(p, static_cast<unsigned long>(v));
  if (p == 2) return mod(u, Int(8)) == 1;
  return legendre(u, p) == 1;
}

bool is_square_qp(const Rat& q, const Int& p) {
  return is_square_qp(Int(q.get_num() * q.get_den()), p);
}

int hilbert_symbol(const Int& a, const Int& b, const Int& p) {
  CKIT_ASSERT(a != 0 && b != 0, "hilbert_symbol of zero");
  if (p == kRealPlace) return (a < 0 && b < 0) ? -1 : 1;
  long alpha = valuation(a, p), beta = valuation(b, p);
  Int u = a / pow_int(p, static_cast<unsigned long>(alpha));
  Int v = b / pow_int(p, static_cast<unsigned long>(beta));
  if (p == 2) {
    auto eps = [](const Int& x) { return mod((x - 1) / 2, Int(2)).get_si(); };
    auto omega = [](const Int& x) { return mod((x * x - 1) / 8, Int(2)).get_si(); };
    long e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int s = 1;
  if ((alpha * beta) % 2 != 0 && mod(p, Int(4)) == 3) s = -s;
  if (beta % 2 != 0) s *= legendre(u, p);
  if (alpha % 2 != 0) s *= legendre(v, p);
  return s;
}

int hasse_invariant(const DiagonalForm& d, const Int& p) {
  int h = 1;
  for (std::size_t i = 0; i < d.entries.size(); ++i)
    for (std::size_t j = i + 1; j < d.entries.size(); ++j) h *= hilbert_symbol(d.entries[i], d.entries[j], p);
  return h;
}

bool trivial_over_qp(const DiagonalForm& d, const Int& p) {
  if (p != 2) return finite_trivial(boundary_p(d, p)) && finite_trivial(boundary_p_unit(d, p));
  const std::size_t r = d.rank();
  if (r % 2 != 0) return false;
  if (r == 0) return true;
  DiagonalForm split;
  for (std::size_t i = 0; i < r / 2; ++i) {
    split.entries.push_back(1);
    split.entries.push_back(-1);
  }
  Int disc_ratio = d.discriminant() * split.discriminant();
  return is_square_qp(disc_ratio, p) && hasse_invariant(d, p) == hasse_invariant(split, p);
}

bool trivial_over_q(const DiagonalForm& d) {
  if (d.signature() != 0) return false;
  std::vector<Int> primes;
  for (auto& a : d.entries)
    for (auto& q : prime_divisors(a))
      if (q != 2 && std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
  for (auto& q : primes)
    if (!finite_trivial(boundary_p(d, q))) return false;
  return trivial_over_qp(d, Int(2));
}

}  // namespace ckit
