#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fusionfact/fusion_ring.hpp"

namespace fusionfact {

struct FpOptions {
  double tolerance = 1e-9;       // acceptance bound on residuals
  double convergence = 1e-14;    // sup-norm step size that stops the iteration
  std::size_t max_iterations = 100000;
};

/// Frobenius-Perron data of a fusion ring.
struct FPData {
  std::vector<double> dims;
  double ring_dim = 0.0;
  std::vector<double> regular;  // coefficients of the regular element
  std::optional<std::vector<std::int64_t>> integral_dims;
  double tolerance_used = 0.0;
  double max_residual = 0.0;
  std::size_t iterations = 0;

  bool integral() const { return integral_dims.has_value(); }

  /// Sum of squared dims over `support`, exactly when the dims are integers.
  std::optional<std::int64_t> exact_dim_of(std::span<const std::size_t> support) const;
  double dim_of(std::span<const std::size_t> support) const;
};

struct PerronResult {
  std::vector<double> vector;  // positive, sup-normalized
  double eigenvalue = 0.0;     // of the unshifted operator
  std::size_t iterations = 0;
};

/// Power iteration for the Perron vector of a nonnegative irreducible
/// operator T given by `apply(x, y)` (y = T x). Iterates x <- (x + T x) / |.|_inf
/// so that the shifted operator is primitive.
PerronResult perron_vector(std::size_t n, const std::function<void(std::span<const double>, std::span<double>)>& apply,
                           const FpOptions& options = {});

/// Throws ConvergenceFailure or ResidualTooLarge.
FPData fp_data(const FusionRing& ring, const FpOptions& options = {});

/// Coefficients of R = sum_i FPdim(X_i) X_i.
std::vector<double> regular_element(const FusionRing& ring, const FpOptions& options = {});

/// Largest |dims[i]*dims[j] - sum_k N_ij^k dims[k]| over all i, j.
double multiplicativity_residual(const FusionRing& ring, std::span<const double> dims);

}  // namespace fusionfact
