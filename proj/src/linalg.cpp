#include "ckit/linalg.hpp"

#include <algorithm>
#include <utility>

namespace ckit {

IntMatrix to_int(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw InputError("matrix entry " + m(i, j).get_str() + " is not an integer");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).get_den() != 1) return false;
  return true;
}

Int det(const IntMatrix& m_in) {
  CKIT_ASSERT(m_in.square(), "det of non-square matrix");
  const std::size_t n = m_in.rows();
  if (n == 0) return 1;
  IntMatrix m = m_in;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rat det(const RatMatrix& m_in) {
  CKIT_ASSERT(m_in.square(), "det of non-square matrix");
  RatMatrix m = m_in;
  const std::size_t n = m.rows();
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

RatMatrix rref(const RatMatrix& m_in, std::vector<std::size_t>* pivots) {
  RatMatrix m = m_in;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
    Rat inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  CKIT_ASSERT(m.square(), "inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return RatMatrix(0, 0);
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  RatMatrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  return r.block(0, n, n, n);
}

RatMatrix column_basis(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return m.select_columns(piv);
}

RatMatrix kernel(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  RatMatrix r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free.push_back(c);
  RatMatrix k(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], f) = -r(i, free[f]);
  }
  return k;
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
  CKIT_ASSERT(a.rows() == b.rows(), "solve shape mismatch");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  std::vector<std::size_t> piv;
  RatMatrix r = rref(aug, &piv);
  if (piv.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (piv[i] != i) return std::nullopt;
  for (std::size_t i = n; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (r(i, n + j) != 0) return std::nullopt;
  return r.block(0, n, n, b.cols());
}

std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
  Int den = 1;
  for (auto& x : v) den = lcm(den, x.get_den());
  std::vector<Int> out(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * den;
    out[i] = s.get_num();
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

std::vector<Int> smith_invariants(const IntMatrix& m_in) {
  IntMatrix m = m_in;
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, a), m(i, b));
  };
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the remaining block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m(i, j) != 0 && (bi == rows || abs(m(i, j)) < abs(m(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) {
        std::vector<Int> out;
        for (std::size_t k = 0; k < n; ++k) out.push_back(k < t ? m(k, k) : Int(0));
        return out;
      }
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility d_t | every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) m(t, k) += m(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (m(t, t) < 0) m(t, t) = -m(t, t);
  }
  std::vector<Int> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(m(k, k));
  return out;
}

IntMatrix lattice_basis(const IntMatrix& gens) {
  IntMatrix m = gens;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pc = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t c = pc; c < cols; ++c)
        if (m(r, c) != 0 && (best == cols || abs(m(r, c)) < abs(m(r, best)))) best = c;
      if (best == cols) throw InternalError("lattice_basis: generators do not span");
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, pc), m(i, best));
      bool done = true;
      for (std::size_t c = pc + 1; c < cols; ++c) {
        if (m(r, c) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), m(r, c).get_mpz_t(), m(r, pc).get_mpz_t());
        for (std::size_t i = 0; i < rows; ++i) m(i, c) -= q * m(i, pc);
        if (m(r, c) != 0) done = false;
      }
      if (done) break;
    }
    ++pc;
  }
  return m.block(0, 0, rows, rows);
}

IntMatrix unimodular_with_first_column(const std::vector<Int>& x) {
  const std::size_t n = x.size();
  std::vector<Int> y = x;
  IntMatrix u = IntMatrix::identity(n);
  // Invariant: u * y == x.  Row operations on y are mirrored by inverse
  // column operations on u.
  for (;;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (y[i] != 0 && (piv == n || abs(y[i]) < abs(y[piv]))) piv = i;
    if (piv == n) throw InputError("zero vector has no unimodular completion");
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == piv || y[i] == 0) continue;
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), y[i].get_mpz_t(), y[piv].get_mpz_t());
      y[i] -= q * y[piv];
      for (std::size_t r = 0; r < n; ++r) u(r, piv) += q * u(r, i);
      if (y[i] != 0) done = false;
    }
    if (!done) continue;
    if (piv != 0) {
      std::swap(y[0], y[piv]);
      for (std::size_t r = 0; r < n; ++r) std::swap(u(r, 0), u(r, piv));
    }
    if (y[0] < 0) {
      y[0] = -y[0];
      for (std::size_t r = 0; r < n; ++r) u(r, 0) = -u(r, 0);
    }
    if (y[0] != 1) throw InputError("vector is not primitive");
    return u;
  }
}

}  // namespace ckit
