#include "fusionfact/smith.hpp"

#include <map>
#include <numeric>
#include <utility>

#include "fusionfact/errors.hpp"

namespace fusionfact {

namespace {

std::int64_t mod(__int128 x, std::int64_t m) {
  auto r = static_cast<std::int64_t>(x % m);
  return r < 0 ? r + m : r;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
void extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& s, std::int64_t& t) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const auto q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
  g = r0, s = s0, t = t0;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t g, s, t;
  extended_gcd(mod(a, m), m, g, s, t);
  if (g != 1) invariant_failure("inverse of a non-unit");
  return mod(s, m);
}

}  // namespace

std::vector<std::pair<std::int64_t, std::size_t>> factorize_integer(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::size_t>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    std::size_t e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::pair<std::int64_t, std::size_t>> SmithResult::image_order() const {
  std::map<std::int64_t, std::size_t> exps;
  for (auto s : diagonal) {
    const auto size = modulus / std::gcd(s, modulus);
    for (auto [p, e] : factorize_integer(size)) exps[p] += e;
  }
  return {exps.begin(), exps.end()};
}

SmithResult modular_smith(DenseMatrix a, std::int64_t m, std::optional<std::vector<std::int64_t>> rhs) {
  if (m < 1) throw Error(ErrorCode::MalformedInput, "modulus must be positive");
  const auto rows = a.rows, cols = a.cols;
  for (auto& x : a.data) x = mod(x, m);
  std::vector<std::int64_t> b;
  if (rhs) {
    if (rhs->size() != rows) throw Error(ErrorCode::MalformedInput, "right-hand side has wrong length");
    b = *rhs;
    for (auto& x : b) x = mod(x, m);
  }
  const bool solve = rhs.has_value();
  DenseMatrix v;
  if (solve) {
    v = DenseMatrix(cols, cols);
    for (std::size_t j = 0; j < cols; ++j) v(j, j) = 1;
  }

  // row_i <- x*row_i + y*row_k, row_k <- z*row_i + w*row_k on columns >= from
  auto combine_rows = [&](std::size_t i, std::size_t k, std::int64_t x, std::int64_t y, std::int64_t z,
                          std::int64_t w, std::size_t from) {
    for (std::size_t j = from; j < cols; ++j) {
      const auto p = a(i, j), q = a(k, j);
      a(i, j) = mod(static_cast<__int128>(x) * p + static_cast<__int128>(y) * q, m);
      a(k, j) = mod(static_cast<__int128>(z) * p + static_cast<__int128>(w) * q, m);
    }
    if (solve) {
      const auto p = b[i], q = b[k];
      b[i] = mod(static_cast<__int128>(x) * p + static_cast<__int128>(y) * q, m);
      b[k] = mod(static_cast<__int128>(z) * p + static_cast<__int128>(w) * q, m);
    }
  };
  auto combine_cols = [&](std::size_t i, std::size_t k, std::int64_t x, std::int64_t y, std::int64_t z,
                          std::int64_t w, std::size_t from) {
    for (std::size_t r = from; r < rows; ++r) {
      const auto p = a(r, i), q = a(r, k);
      a(r, i) = mod(static_cast<__int128>(x) * p + static_cast<__int128>(y) * q, m);
      a(r, k) = mod(static_cast<__int128>(z) * p + static_cast<__int128>(w) * q, m);
    }
    if (solve) {
      for (std::size_t r = 0; r < cols; ++r) {
        const auto p = v(r, i), q = v(r, k);
        v(r, i) = mod(static_cast<__int128>(x) * p + static_cast<__int128>(y) * q, m);
        v(r, k) = mod(static_cast<__int128>(z) * p + static_cast<__int128>(w) * q, m);
      }
    }
  };

  const auto n = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t pi = rows, pj = cols;
    std::int64_t best_g = m + 1, best_v = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const auto x = a(i, j);
        if (x == 0) continue;
        const auto g = std::gcd(x, m);
        if (g < best_g || (g == best_g && x < best_v)) best_g = g, best_v = x, pi = i, pj = j;
      }
    if (pi == rows) break;
    if (pi != t) combine_rows(t, pi, 0, 1, 1, 0, t);
    if (pj != t) combine_cols(t, pj, 0, 1, 1, 0, 0);

    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const auto q = a(i, t);
        if (q == 0) continue;
        const auto p = a(t, t);
        if (q % p == 0) {
          combine_rows(t, i, 1, 0, -(q / p), 1, t);
        } else {
          std::int64_t g, s, u;
          extended_gcd(p, q, g, s, u);
          combine_rows(t, i, s, u, -(q / g), p / g, t);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const auto q = a(t, j);
        if (q == 0) continue;
        const auto p = a(t, t);
        if (q % p == 0) {
          combine_cols(t, j, 1, 0, -(q / p), 1, t);
        } else {
          std::int64_t g, s, u;
          extended_gcd(p, q, g, s, u);
          combine_cols(t, j, s, u, -(q / g), p / g, t);
          changed = true;
        }
      }
    }
  }

  SmithResult result;
  result.modulus = m;
  result.diagonal.resize(n, 0);
  for (std::size_t d = 0; d < t; ++d) result.diagonal[d] = a(d, d);
  if (!solve) return result;

  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto s = r < n ? result.diagonal[r] : 0;
    const auto g = std::gcd(s, m);
    if (b[r] % g != 0) {
      result.obstruction = SmithObstruction{r, s, b[r]};
      return result;
    }
    if (s != 0) {
      const auto mg = m / g;
      y[r] = mod(static_cast<__int128>(b[r] / g) * inverse_mod(s / g, mg), mg);
    }
  }
  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < cols; ++j) acc += static_cast<__int128>(v(i, j)) * y[j];
    x[i] = mod(acc, m);
  }
  result.solution = std::move(x);
  return result;
}

}  // namespace fusionfact
