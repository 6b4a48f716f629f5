#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fusionfact/fp_data.hpp"
#include "fusionfact/fusion_ring.hpp"

namespace fusionfact {

/// Support of a fusion subring: contains the unit, closed under duals and
/// under taking summands of products. Always paired with its ambient ring
/// at call sites.
class FusionSubring {
 public:
  /// Throws NotSubring if `support` is not closed.
  static FusionSubring from_support(const FusionRing& ring, std::vector<std::size_t> support);

  const std::vector<std::size_t>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  bool contains(std::size_t i) const;
  bool is_trivial() const { return support_.size() == 1; }

  friend auto operator<=>(const FusionSubring&, const FusionSubring&) = default;

 private:
  explicit FusionSubring(std::vector<std::size_t> s) : support_(std::move(s)) {}
  std::vector<std::size_t> support_;

  friend FusionSubring subring_generated(const FusionRing&, std::span<const std::size_t>);
};

/// True when `support` (sorted) is closed as a subring.
bool is_closed_support(const FusionRing& ring, std::span<const std::size_t> support);

/// Smallest subring containing `seed` and the unit.
FusionSubring subring_generated(const FusionRing& ring, std::span<const std::size_t> seed);

/// Subring ordering used everywhere: by size, then lexicographically.
bool subring_less(const FusionSubring& a, const FusionSubring& b);

/// All subrings, sorted by `subring_less`. Throws RankBoundExceeded.
std::vector<FusionSubring> enumerate_subrings(const FusionRing& ring, std::size_t max_rank = 16);

/// Indices k with N_xy^k > 0 for some x in A, y in C. Not closed in general.
std::vector<std::size_t> product_support(const FusionRing& ring, const FusionSubring& a, const FusionSubring& c);

std::vector<std::size_t> intersect(const FusionSubring& a, const FusionSubring& c);

/// FP dimensions of A, C, D = A n C, the product span AC, and the ring B.
/// `exact` is filled when the ring's dims are certified integers.
struct SubringDims {
  double a = 0, c = 0, d = 0, ac = 0, b = 0;
  struct Exact {
    std::int64_t a, c, d, ac, b;
  };
  std::optional<Exact> exact;
};

struct DimIdentityReport {
  SubringDims dims;
  std::vector<std::size_t> d_support;
  std::vector<std::size_t> ac_support;
  double relative_residual = 0.0;  // |A*C - AC*D| / B^2
  bool identity_holds = false;
  bool inequality_holds = false;   // B*D >= A*C
  bool is_factorization = false;   // equality in the inequality
  bool support_is_full = false;    // AC covers every basis element
};

/// Dimension comparisons: exact for integral dims, otherwise relative.
inline constexpr double kRelativeTolerance = 1e-9;

/// Throws IdentityViolation when A*C != AC*D or when the equality case
/// disagrees with full support of AC (both are theorems).
DimIdentityReport check_dim_identity(const FusionRing& ring, const FPData& fp, const FusionSubring& a,
                                     const FusionSubring& c, double tolerance = kRelativeTolerance);

enum class FailureReason {
  None,
  NotSimple,      // some x*y is not a single basis element
  NotInjective,   // two pairs give the same product
  NotSurjective,  // some basis element is not a product
};

std::string_view to_string(FailureReason reason);

struct PairCounterexample {
  FailureReason reason = FailureReason::None;
  std::size_t x = 0, y = 0;
  std::vector<std::pair<std::size_t, std::uint64_t>> decomposition;  // of x*y
  std::optional<std::pair<std::size_t, std::size_t>> other_pair;     // colliding pair
  std::optional<std::size_t> missed;                                 // basis element not reached
};

struct FactorizationReport {
  FusionSubring a;
  FusionSubring c;
  std::vector<std::size_t> d_support;
  std::vector<std::size_t> ac_support;
  SubringDims dims;
  bool is_factorization = false;
  bool is_exact_dim = false;     // D trivial and FPdim(B) = FPdim(A) FPdim(C)
  bool is_exact_unique = false;  // every basis element uniquely x*y
  std::vector<std::array<std::size_t, 3>> bijection;  // (x, y, z) with x*y = z
  std::optional<PairCounterexample> counterexample;
};

/// Evaluates both exactness criteria independently and asserts they agree.
FactorizationReport is_exact_factorization(const FusionRing& ring, const FPData& fp, const FusionSubring& a,
                                           const FusionSubring& c, double tolerance = kRelativeTolerance);

/// All ordered exact pairs (A, C), sorted by (A, C). Throws RankBoundExceeded.
std::vector<FactorizationReport> enumerate_exact_factorizations(const FusionRing& ring, const FPData& fp,
                                                                std::size_t max_rank = 16,
                                                                double tolerance = kRelativeTolerance);

/// The subring as a fusion ring in its own right (basis in support order).
FusionRing subring_as_ring(const FusionRing& ring, const FusionSubring& s);

/// Tensor product of fusion rings; basis (i, i') at index i * rank2 + i'.
FusionRing deligne_product(const FusionRing& r1, const FusionRing& r2);

struct DeligneShadow {
  bool deligne_type = false;
  // First (x,y), (x',y'), (x'',y'') where the structure constants disagree.
  std::optional<std::array<std::size_t, 6>> mismatch;
  static constexpr std::string_view kLabel = "Deligne-type at ring level";
};

/// Whether the bijection (x, y) -> x*y of an exact factorization is a ring
/// isomorphism from A (x) C onto the ambient ring. Throws NotExact.
DeligneShadow deligne_shadow_check(const FusionRing& ring, const FPData& fp, const FusionSubring& a,
                                   const FusionSubring& c, double tolerance = kRelativeTolerance);

}  // namespace fusionfact
