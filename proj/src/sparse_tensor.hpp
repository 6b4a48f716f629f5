#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "fusionfact/fusion_ring.hpp"

namespace fusionfact::detail {

// Row-sliced view of unvalidated (i, j, k, mult) data; rows keyed by (i, j).
class SparseTensor {
 public:
  using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;

  SparseTensor(std::size_t ni, std::size_t nj, const std::vector<TensorEntry>& raw) : nj_(nj), rows_(ni * nj) {
    for (const auto& e : raw) {
      if (e.mult == 0) continue;
      rows_[e.i * nj_ + e.j].push_back({e.k, e.mult});
    }
    for (auto& row : rows_) std::sort(row.begin(), row.end());
  }

  const Row& row(std::size_t i, std::size_t j) const { return rows_[i * nj_ + j]; }

  std::uint64_t get(std::size_t i, std::size_t j, std::size_t k) const {
    const auto& r = row(i, j);
    auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(k, std::uint64_t{0}));
    return (it != r.end() && it->first == k) ? it->second : 0;
  }

 private:
  std::size_t nj_;
  std::vector<Row> rows_;
};

}  // namespace fusionfact::detail
