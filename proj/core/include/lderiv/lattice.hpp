#pragma once

#include <gmpxx.h>

#include <vector>

namespace lderiv {

// Row-major integer matrix; each row is one lattice basis vector.
using IntMatrix = std::vector<std::vector<mpz_class>>;

struct LllOptions {
  double delta = 0.99;
  double eta = 0.51;
};

struct LllStats {
  long swaps = 0;
  long size_reductions = 0;
  long precision_bits = 0;
};

// LLL-reduces the rows of `basis` in place. Rows must be linearly
// independent. Gram-Schmidt data is kept in floating point while the basis
// and Gram matrix stay exact, with lazy (repeated) size reduction so that
// huge entries need no more than O(dimension) bits of float precision.
LllStats lll_reduce(IntMatrix& basis, const LllOptions& options = {});

}  // namespace lderiv
