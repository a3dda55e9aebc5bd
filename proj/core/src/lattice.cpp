#include "lderiv/lattice.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstddef>
#include <string>

#include "lderiv/errors.hpp"

namespace lderiv {

namespace {

// Square array of MPFR values.
class FpSquare {
 public:
  FpSquare(std::size_t n, mpfr_prec_t prec) : n_(n), data_(n * n) {
    for (auto& x : data_) mpfr_init2(x.v, prec), mpfr_set_zero(x.v, 1);
  }
  FpSquare(const FpSquare&) = delete;
  FpSquare& operator=(const FpSquare&) = delete;
  ~FpSquare() {
    for (auto& x : data_) mpfr_clear(x.v);
  }
  mpfr_ptr operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j].v; }

 private:
  struct Cell {
    mpfr_t v;
  };
  std::size_t n_;
  std::vector<Cell> data_;
};

class FpScalar {
 public:
  explicit FpScalar(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  FpScalar(const FpScalar&) = delete;
  FpScalar& operator=(const FpScalar&) = delete;
  ~FpScalar() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Signals that float precision was insufficient; caught and retried.
struct PrecisionExhausted {};

class Reducer {
 public:
  Reducer(IntMatrix& basis, const LllOptions& options, mpfr_prec_t prec)
      : b_(basis),
        n_(basis.size()),
        opt_(options),
        prec_(prec),
        r_(n_, prec),
        mu_(n_, prec),
        tmp_(prec),
        tmp2_(prec),
        x_fp_(prec) {
    gram_.assign(n_, std::vector<mpz_class>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j <= i; ++j) gram_[i][j] = dot(b_[i], b_[j]);
    }
  }

  LllStats run() {
    LllStats stats;
    stats.precision_bits = static_cast<long>(prec_);
    if (n_ < 2) return stats;
    set_fp(r_(0, 0), g(0, 0));
    std::size_t k = 1;
    const long max_steps = 200000L * static_cast<long>(n_);
    long steps = 0;
    while (k < n_) {
      if (++steps > max_steps) throw ComputationError("LLL did not terminate");
      size_reduce(k, stats);
      // Lovasz condition: delta r_{k-1} <= r_k + mu^2 r_{k-1}
      mpfr_sqr(tmp_.get(), mu_(k, k - 1), MPFR_RNDN);
      mpfr_mul(tmp_.get(), tmp_.get(), r_(k - 1, k - 1), MPFR_RNDN);
      mpfr_add(tmp_.get(), tmp_.get(), r_(k, k), MPFR_RNDN);
      mpfr_mul_d(tmp2_.get(), r_(k - 1, k - 1), opt_.delta, MPFR_RNDN);
      if (mpfr_cmp(tmp2_.get(), tmp_.get()) > 0) {
        swap_rows(k - 1);
        ++stats.swaps;
        if (k == 1) set_fp(r_(0, 0), g(0, 0));
        k = std::max<std::size_t>(k - 1, 1);
      } else {
        ++k;
      }
    }
    return stats;
  }

 private:
  static mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    }
    return s;
  }

  mpz_class& g(std::size_t i, std::size_t j) { return i >= j ? gram_[i][j] : gram_[j][i]; }

  void set_fp(mpfr_ptr dst, const mpz_class& v) { mpfr_set_z(dst, v.get_mpz_t(), MPFR_RNDN); }

  // r(k, j) and mu(k, j) for j < k, and r(k, k).
  void gso_row(std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      set_fp(r_(k, j), g(k, j));
      for (std::size_t i = 0; i < j; ++i) {
        mpfr_mul(tmp_.get(), mu_(j, i), r_(k, i), MPFR_RNDN);
        mpfr_sub(r_(k, j), r_(k, j), tmp_.get(), MPFR_RNDN);
      }
      mpfr_div(mu_(k, j), r_(k, j), r_(j, j), MPFR_RNDN);
    }
    set_fp(r_(k, k), g(k, k));
    for (std::size_t j = 0; j < k; ++j) {
      mpfr_mul(tmp_.get(), mu_(k, j), r_(k, j), MPFR_RNDN);
      mpfr_sub(r_(k, k), r_(k, k), tmp_.get(), MPFR_RNDN);
    }
  }

  void size_reduce(std::size_t k, LllStats& stats) {
    // Each pass shrinks b_k by roughly 2^prec, so the pass count is bounded
    // by the bit length of the entries over the precision.
    for (int pass = 0;; ++pass) {
      if (pass > 400) throw PrecisionExhausted{};
      gso_row(k);
      bool reduced = true;
      for (std::size_t j = 0; j < k; ++j) {
        mpfr_abs(tmp_.get(), mu_(k, j), MPFR_RNDN);
        if (mpfr_cmp_d(tmp_.get(), opt_.eta) > 0) {
          reduced = false;
          break;
        }
      }
      if (reduced) return;
      ++stats.size_reductions;
      for (std::size_t jj = k; jj-- > 0;) {
        mpfr_rint(x_fp_.get(), mu_(k, jj), MPFR_RNDN);
        if (mpfr_zero_p(x_fp_.get())) continue;
        mpz_class x;
        mpfr_get_z(x.get_mpz_t(), x_fp_.get(), MPFR_RNDN);
        for (std::size_t c = 0; c < b_[k].size(); ++c) {
          if (b_[jj][c] != 0) b_[k][c] -= x * b_[jj][c];
        }
        for (std::size_t i = 0; i < jj; ++i) {
          mpfr_mul(tmp_.get(), x_fp_.get(), mu_(jj, i), MPFR_RNDN);
          mpfr_sub(mu_(k, i), mu_(k, i), tmp_.get(), MPFR_RNDN);
        }
        // Exact Gram update for b_k <- b_k - x b_j.
        g(k, k) += x * x * g(jj, jj) - 2 * x * g(k, jj);
        for (std::size_t i = 0; i < n_; ++i) {
          if (i != k) g(k, i) -= x * g(jj, i);
        }
      }
    }
  }

  void swap_rows(std::size_t i) {
    std::swap(b_[i], b_[i + 1]);
    // Swap row/column i and i+1 of the symmetric Gram matrix.
    for (std::size_t c = 0; c < n_; ++c) {
      if (c == i || c == i + 1) continue;
      std::swap(g(i, c), g(i + 1, c));
    }
    std::swap(g(i, i), g(i + 1, i + 1));
  }

  IntMatrix& b_;
  std::size_t n_;
  LllOptions opt_;
  mpfr_prec_t prec_;
  std::vector<std::vector<mpz_class>> gram_;
  FpSquare r_;
  FpSquare mu_;
  FpScalar tmp_, tmp2_, x_fp_;
};

}  // namespace

LllStats lll_reduce(IntMatrix& basis, const LllOptions& options) {
  if (!(options.delta > 0.25 && options.delta < 1.0) || !(options.eta >= 0.5)) {
    throw ValidationError("LLL parameters require 1/4 < delta < 1 and eta >= 1/2");
  }
  for (const auto& row : basis) {
    if (row.size() != basis.front().size()) throw ValidationError("ragged lattice basis");
  }
  const auto n = static_cast<mpfr_prec_t>(basis.size());
  mpfr_prec_t prec = std::max<mpfr_prec_t>(160, 2 * n + 100);
  for (int attempt = 0; attempt < 6; ++attempt, prec *= 2) {
    try {
      Reducer reducer(basis, options, prec);
      return reducer.run();
    } catch (const PrecisionExhausted&) {
      // The basis stays a valid basis of the same lattice; retry from here.
    }
  }
  throw PrecisionError("LLL size reduction failed to converge at " + std::to_string(prec) +
                       " bits");
}

}  // namespace lderiv
