#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fusionfact/fp_data.hpp"
#include "fusionfact/fusion_ring.hpp"

namespace fusionfact {

/// Unvalidated based-module description: action[i,j,k] is the multiplicity
/// of M_k in X_i * M_j. Ring indices are canonical (unit = 0).
struct RawModule {
  std::vector<std::string> labels;
  std::vector<TensorEntry> action;
};

/// Indecomposable based module over a fusion ring, with FP dimensions
/// normalized so that sum_j mdims[j]^2 equals the FP dimension of the ring.
class FusionModule {
 public:
  static std::vector<Violation> check(const FusionRing& base, const RawModule& raw);

  /// Throws ActionAxiomViolation, Decomposable, or NormalizationFailure.
  static FusionModule validate(const FusionRing& base, const RawModule& raw, const FpOptions& options = {});

  const FusionRing& base() const { return data_->base; }
  std::size_t rank() const { return data_->labels.size(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::span<const TensorEntry> entries() const { return data_->entries; }
  std::uint64_t action(std::size_t i, std::size_t j, std::size_t k) const;

  const std::vector<double>& mdims() const { return data_->mdims; }
  double max_residual() const { return data_->max_residual; }

 private:
  struct Data {
    FusionRing base;
    std::vector<std::string> labels;
    std::vector<TensorEntry> entries;
    std::vector<double> mdims;
    double max_residual = 0.0;
  };
  explicit FusionModule(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// The ring acting on itself by left multiplication.
RawModule regular_module(const FusionRing& ring);

/// Connected components of the action graph (edge j-k when some A_ij^k > 0).
std::vector<std::vector<std::size_t>> action_components(std::size_t mrank, std::span<const TensorEntry> action);

}  // namespace fusionfact
