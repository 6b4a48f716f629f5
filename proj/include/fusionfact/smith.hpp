#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace fusionfact {

/// Dense row-major integer matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// First diagonal congruence s * y = b (mod m) that has no solution.
struct SmithObstruction {
  std::size_t index = 0;
  std::int64_t invariant_factor = 0;
  std::int64_t rhs = 0;
};

/// Diagonal form U A V = S over Z/m together with the solution of A x = b
/// when a right-hand side was supplied.
struct SmithResult {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> diagonal;  // min(rows, cols) entries, reduced mod m
  std::optional<std::vector<std::int64_t>> solution;
  std::optional<SmithObstruction> obstruction;

  /// Size of the image of A in (Z/m)^rows, as prime exponents of m.
  std::vector<std::pair<std::int64_t, std::size_t>> image_order() const;
};

/// Diagonalizes A over Z/m with unimodular row and column operations
/// (pivot of minimal gcd with m, Bezout steps for the rest). Row operations
/// are also applied to `rhs`; column operations are accumulated to map the
/// diagonal solution back.
SmithResult modular_smith(DenseMatrix a, std::int64_t m, std::optional<std::vector<std::int64_t>> rhs = std::nullopt);

/// Prime factorization by trial division.
std::vector<std::pair<std::int64_t, std::size_t>> factorize_integer(std::int64_t n);

}  // namespace fusionfact
