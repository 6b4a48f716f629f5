#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusionfact/errors.hpp"

namespace fusionfact {

/// A single structure constant: multiplicity `mult` of basis element k in i*j.
/// Also used for module actions, where j and k index the module basis.
struct TensorEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::uint64_t mult = 0;

  friend auto operator<=>(const TensorEntry&, const TensorEntry&) = default;
};

/// Unvalidated ring description as read from a file or assembled in code.
/// Entries not listed are zero. If `unit` is empty it is inferred.
struct RawRing {
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  std::vector<TensorEntry> tensor;
  std::optional<std::size_t> unit;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Validated fusion ring. Immutable; copies share storage.
///
/// The basis is canonicalized so that the unit is index 0. Structure
/// constants are stored as a coordinate list sorted by (i, j, k), with an
/// offset table giving the slice for each product i*j.
class FusionRing {
 public:
  /// Checks every axiom and returns all violations found (at most one
  /// witness per axiom). An empty result means `validate` will succeed.
  static std::vector<Violation> check(const RawRing& raw);

  /// Throws Error (code of the first violation, all violations attached).
  static FusionRing validate(const RawRing& raw);

  std::size_t rank() const { return data_->rank; }
  static constexpr std::size_t unit() { return 0; }

  std::size_t dual(std::size_t i) const { return data_->dual.at(i); }
  const std::vector<std::size_t>& duals() const { return data_->dual; }

  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::optional<std::size_t> find_label(std::string_view label) const;

  /// N_{ij}^k.
  std::uint64_t mult(std::size_t i, std::size_t j, std::size_t k) const;

  /// Nonzero terms of i*j, sorted by k.
  std::span<const TensorEntry> product(std::size_t i, std::size_t j) const;

  /// Sum of multiplicities in i*j.
  std::uint64_t product_length(std::size_t i, std::size_t j) const;

  std::span<const TensorEntry> entries() const { return data_->entries; }

  /// For each canonical index, the index it had in the input description.
  const std::vector<std::size_t>& input_order() const { return data_->input_order; }

  bool is_commutative() const;

  /// True when every product is a single basis element.
  bool is_pointed() const;

  RawRing to_raw() const;

  friend bool operator==(const FusionRing& a, const FusionRing& b);

 private:
  struct Data {
    std::size_t rank = 0;
    std::vector<std::string> labels;
    std::vector<std::size_t> dual;
    std::vector<TensorEntry> entries;
    std::vector<std::size_t> offsets;  // rank*rank + 1
    std::vector<std::size_t> input_order;
  };
  explicit FusionRing(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Left multiplication matrix of basis element i: (N_i)_{jk} = N_{ij}^k.
IntMatrix fusion_matrix(const FusionRing& ring, std::size_t i);

/// Same ring with the basis permuted: element i moves to perm[i]. The
/// result is re-canonicalized, so the unit ends up at index 0 again.
FusionRing relabel(const FusionRing& ring, std::span<const std::size_t> perm);

/// A basis bijection p with N_{p(i)p(j)}^{p(k)} = N_ij^k, found by
/// backtracking; labels are ignored.
std::optional<std::vector<std::size_t>> find_isomorphism(const FusionRing& a, const FusionRing& b);

}  // namespace fusionfact
