#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusionfact/group.hpp"
#include "fusionfact/smith.hpp"

namespace fusionfact {

/// Exact element of Q/Z, stored as num/den with 0 <= num < den, reduced.
class CircleValue {
 public:
  CircleValue() = default;
  CircleValue(std::int64_t num, std::int64_t den);

  /// "p/q" or an integer; the value is reduced mod 1.
  static CircleValue parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  std::string to_string() const;

  friend CircleValue operator+(CircleValue a, CircleValue b);
  friend CircleValue operator-(CircleValue a, CircleValue b);
  friend CircleValue operator-(CircleValue a);
  CircleValue& operator+=(CircleValue b) { return *this = *this + b; }
  CircleValue& operator-=(CircleValue b) { return *this = *this - b; }
  friend bool operator==(const CircleValue&, const CircleValue&) = default;
  friend auto operator<=>(const CircleValue&, const CircleValue&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline constexpr std::size_t kMaxCochainDegree = 5;
inline constexpr std::size_t kMaxCochainEntries = 10'000'000;

/// Function G^k -> Q/Z stored densely; the tuple (g_1, ..., g_k) sits at
/// sum g_i |G|^(k-i). Degree 0 is a single constant.
class Cochain {
 public:
  /// Zero cochain. Throws TooLarge for oversized tables.
  Cochain(FiniteGroup group, std::size_t degree);

  const FiniteGroup& group() const { return group_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return values_.size(); }

  CircleValue at(std::span<const Element> args) const { return values_[index(args)]; }
  void set(std::span<const Element> args, CircleValue v) { values_[index(args)] = v; }
  CircleValue operator[](std::size_t flat) const { return values_[flat]; }
  CircleValue& operator[](std::size_t flat) { return values_[flat]; }
  const std::vector<CircleValue>& values() const { return values_; }

  std::size_t index(std::span<const Element> args) const;
  std::vector<Element> tuple(std::size_t flat) const;

  bool is_zero() const;
  /// Zero whenever some argument is the identity.
  bool is_normalized() const;
  /// lcm of all denominators (1 for the zero cochain).
  std::int64_t common_denominator() const;

  friend Cochain operator+(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a, const Cochain& b);
  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  FiniteGroup group_;
  std::size_t degree_;
  std::vector<CircleValue> values_;
};

/// Inhomogeneous bar differential. Throws DegreeUnsupported for degree > 4.
/// Debug builds also check d(df) = 0.
Cochain coboundary(const Cochain& f);

/// First tuple where d(omega) is nonzero, if any.
std::optional<std::vector<Element>> cocycle_defect(const Cochain& omega);
bool is_cocycle(const Cochain& omega);

/// omega(a, b, c) = q a floor((b + c) / n) / n on cyclic_group(n).
Cochain cyclic_3cocycle(std::size_t n, std::size_t q);

/// Restriction to L in L's own numbering (`Subgroup::as_group`).
Cochain restrict_cochain(const Cochain& f, const Subgroup& l);

inline constexpr std::int64_t kMaxModulus = 1'000'000;

struct TrivializeResult {
  std::int64_t modulus = 0;
  std::optional<Cochain> witness;             // psi with d(psi) = omega
  std::optional<SmithObstruction> obstruction;  // when no witness exists mod `modulus`
  std::size_t rank = 0;                       // number of nonzero invariant factors
};

/// Solves d(psi) = omega over (1/m)Z/Z with m = common_denominator * |L|
/// unless `modulus` is given. Throws NotACocycle, CoefficientOverflow.
TrivializeResult trivialize(const Cochain& omega, std::optional<std::int64_t> modulus = std::nullopt);

/// Integer matrix of d on degree-k cochains (rows: (k+1)-tuples).
DenseMatrix coboundary_matrix(const FiniteGroup& g, std::size_t k);

/// |H^k(L; (1/m)Z/Z)| from the images of d_k and d_{k-1}. Throws TooLarge.
std::uint64_t brute_classes(const FiniteGroup& l, std::size_t k, std::int64_t m);

}  // namespace fusionfact
