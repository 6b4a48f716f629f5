#include "fusionfact/fp_data.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fusionfact {

PerronResult perron_vector(std::size_t n, const std::function<void(std::span<const double>, std::span<double>)>& apply,
                           const FpOptions& options) {
  std::vector<double> x(n, 1.0), tx(n), next(n);
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    apply(x, tx);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = x[i] + tx[i];
      norm = std::max(norm, std::abs(next[i]));
    }
    if (norm == 0.0) throw Error(ErrorCode::ConvergenceFailure, "iterate vanished", {it});
    double step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= norm;
      step = std::max(step, std::abs(next[i] - x[i]));
    }
    std::swap(x, next);
    if (step < options.convergence) {
      apply(x, tx);
      // Rayleigh-style estimate at the largest coordinate.
      auto imax = static_cast<std::size_t>(std::max_element(x.begin(), x.end()) - x.begin());
      return {x, tx[imax] / x[imax], it};
    }
  }
  throw Error(ErrorCode::ConvergenceFailure,
              "power iteration did not converge in " + std::to_string(options.max_iterations) + " iterations",
              {options.max_iterations});
}

double multiplicativity_residual(const FusionRing& ring, std::span<const double> dims) {
  double worst = 0.0;
  for (std::size_t i = 0; i < ring.rank(); ++i)
    for (std::size_t j = 0; j < ring.rank(); ++j) {
      double s = 0.0;
      for (const auto& e : ring.product(i, j)) s += static_cast<double>(e.mult) * dims[e.k];
      worst = std::max(worst, std::abs(dims[i] * dims[j] - s));
    }
  return worst;
}

namespace {

// N_i n = n_i n for all i, in exact integer arithmetic.
bool certify_integral(const FusionRing& ring, const std::vector<std::int64_t>& d) {
  for (std::size_t i = 0; i < ring.rank(); ++i)
    for (std::size_t j = 0; j < ring.rank(); ++j) {
      __int128 s = 0;
      for (const auto& e : ring.product(i, j)) s += static_cast<__int128>(e.mult) * d[e.k];
      if (s != static_cast<__int128>(d[i]) * d[j]) return false;
    }
  return true;
}

}  // namespace

FPData fp_data(const FusionRing& ring, const FpOptions& options) {
  const auto n = ring.rank();
  // (sum_i N_i) x
  auto apply = [&ring](std::span<const double> x, std::span<double> y) {
    std::fill(y.begin(), y.end(), 0.0);
    for (const auto& e : ring.entries()) y[e.j] += static_cast<double>(e.mult) * x[e.k];
  };
  auto pr = perron_vector(n, apply, options);

  FPData fp;
  fp.iterations = pr.iterations;
  fp.tolerance_used = options.tolerance;
  fp.dims.resize(n);
  const double base = pr.vector[FusionRing::unit()];
  for (std::size_t i = 0; i < n; ++i) {
    // (N_i d)[unit] / d[unit]
    double s = 0.0;
    for (const auto& e : ring.product(i, FusionRing::unit())) s += static_cast<double>(e.mult) * pr.vector[e.k];
    fp.dims[i] = s / base;
  }

  bool near_integral = true;
  std::vector<std::int64_t> rounded(n);
  for (std::size_t i = 0; i < n; ++i) {
    double r = std::round(fp.dims[i]);
    if (std::abs(fp.dims[i] - r) > options.tolerance) near_integral = false;
    rounded[i] = static_cast<std::int64_t>(r);
  }
  if (near_integral && certify_integral(ring, rounded)) {
    fp.integral_dims = rounded;
    for (std::size_t i = 0; i < n; ++i) fp.dims[i] = static_cast<double>(rounded[i]);
  }

  fp.max_residual = multiplicativity_residual(ring, fp.dims);
  if (fp.max_residual > options.tolerance)
    throw Error(ErrorCode::ResidualTooLarge, "multiplicativity residual " + std::to_string(fp.max_residual));

  fp.ring_dim = 0.0;
  for (double d : fp.dims) fp.ring_dim += d * d;
  fp.regular = fp.dims;

  if (fp.dims[FusionRing::unit()] != 1.0) invariant_failure("FPdim of the unit is not 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (fp.dims[i] < 1.0 - options.tolerance) invariant_failure("FPdim below 1", {i});
    if (std::abs(fp.dims[ring.dual(i)] - fp.dims[i]) > options.tolerance)
      invariant_failure("FPdim not invariant under duality", {i});
  }
  return fp;
}

std::vector<double> regular_element(const FusionRing& ring, const FpOptions& options) {
  return fp_data(ring, options).regular;
}

std::optional<std::int64_t> FPData::exact_dim_of(std::span<const std::size_t> support) const {
  if (!integral_dims) return std::nullopt;
  std::int64_t s = 0;
  for (auto i : support) s += (*integral_dims)[i] * (*integral_dims)[i];
  return s;
}

double FPData::dim_of(std::span<const std::size_t> support) const {
  double s = 0.0;
  for (auto i : support) s += dims[i] * dims[i];
  return s;
}

}  // namespace fusionfact
