#pragma once

#include <cstddef>
#include <vector>

#include "lderiv/real.hpp"

namespace lderiv {

// Dense row-major matrix over Q.
using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each non-zero row
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(RationalMatrix m);

std::size_t exact_rank(const RationalMatrix& m);

// Basis of {x : m x = 0}; `columns` is needed when m has no rows.
std::vector<std::vector<Rational>> right_kernel(const RationalMatrix& m, std::size_t columns);

// Smallest integer multiple of v with coprime entries and a positive
// leading non-zero entry. v must be non-zero.
std::vector<mpz_class> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace lderiv
