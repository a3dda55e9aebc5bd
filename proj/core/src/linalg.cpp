#include "lderiv/linalg.hpp"

#include <utility>

#include "lderiv/errors.hpp"

namespace lderiv {

RowEchelon row_reduce(RationalMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t exact_rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

std::vector<std::vector<Rational>> right_kernel(const RationalMatrix& m, std::size_t columns) {
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[free] = Rational(1);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<mpz_class> primitive_integer_vector(const std::vector<Rational>& v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.numerator() * (lcm_den / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (g == 0) throw ValidationError("primitive_integer_vector of the zero vector");
  int lead = 0;
  for (const auto& n : out) {
    if (n != 0) {
      lead = sgn(n);
      break;
    }
  }
  for (auto& n : out) {
    n /= g;
    if (lead < 0) n = -n;
  }
  return out;
}

}  // namespace lderiv
