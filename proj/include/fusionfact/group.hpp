#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fusionfact/errors.hpp"

namespace fusionfact {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;  // images of 0..m-1

inline constexpr std::size_t kMaxGroupOrder = 2000;
inline constexpr std::size_t kMaxSubgroupEnumerationOrder = 200;

/// Finite group given by its multiplication table, identity at 0.
/// Immutable; copies share the table.
class FiniteGroup {
 public:
  /// Checks the Latin-square property, identity at 0, and associativity
  /// (exhaustive up to order 512, 10000 seeded random triples above).
  /// Throws NotClosed with a witness, or TooLarge.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table, std::vector<std::string> labels = {},
                                std::size_t max_order = kMaxGroupOrder);

  /// Closure of permutation generators on `points` points (composition
  /// (g*h)(x) = g(h(x))). Elements are numbered in breadth-first discovery
  /// order with the identity first.
  static FiniteGroup from_permutations(std::size_t points, const std::vector<Permutation>& generators,
                                       std::size_t max_order = kMaxGroupOrder);

  std::size_t order() const { return data_->order; }
  static constexpr Element identity() { return 0; }
  Element mul(Element a, Element b) const { return data_->table[static_cast<std::size_t>(a) * data_->order + b]; }
  Element inv(Element a) const { return data_->inverse[a]; }
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  const std::string& label(Element a) const { return data_->labels[a]; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::vector<std::vector<Element>> table() const;
  bool is_abelian() const;
  std::size_t element_order(Element g) const;

  /// Permutation images when the group was built from generators.
  const std::vector<Permutation>& permutations() const { return data_->perms; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_ == b.data_ || a.data_->table == b.data_->table;
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::string> labels;
    std::vector<Permutation> perms;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);   // order 2n
FiniteGroup symmetric_group(std::size_t n);  // n <= 5, from (0 1) and (0 1 ... n-1)
FiniteGroup quaternion_group();              // Q8 from an explicit table
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);  // (g, h) at g * |H| + h

/// N x| H with (n1, h1)(n2, h2) = (n1 * act(h1)(n2), h1 h2); `action[h]` is the
/// image table of the automorphism of N. Throws NotClosed if not a homomorphism.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<Element>>& action);

/// "C<n>", "D<n>" (order 2n), "S<n>", "Q8", and direct products "AxB".
FiniteGroup builtin_group(std::string_view name);

/// Sorted element set of a subgroup. Paired with its parent at call sites.
class Subgroup {
 public:
  /// Throws NotClosed if the set is not a subgroup.
  static Subgroup from_elements(const FiniteGroup& g, std::vector<Element> elements);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element g) const;
  /// Position of g in `elements()`: the numbering used by `as_group`.
  std::size_t local_index(Element g) const;

  /// The subgroup as a group in its own right, numbered by `elements()`.
  FiniteGroup as_group(const FiniteGroup& parent) const;

  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;

 private:
  explicit Subgroup(std::vector<Element> e) : elements_(std::move(e)) {}
  std::vector<Element> elements_;
  friend Subgroup generated_subgroup(const FiniteGroup&, std::span<const Element>);
};

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element x);  // x H x^-1
Subgroup intersect_subgroups(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Sorted by size, then elements. Throws OrderBoundExceeded.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, std::size_t max_order = kMaxSubgroupEnumerationOrder);

struct GroupFactorization {
  Subgroup g1;
  Subgroup g2;
  bool exact = false;
  // For exact pairs: element g -> (g1, g2) with g = g1 g2.
  std::optional<std::vector<std::pair<Element, Element>>> expression_table;
};

/// Decides G = G1 G2 by order count and by brute-force uniqueness of
/// expression; throws InvariantFailure if the two disagree.
GroupFactorization check_group_factorization(const FiniteGroup& g, const Subgroup& g1, const Subgroup& g2);

/// All exact ordered pairs, sorted by (G1, G2). Throws OrderBoundExceeded.
std::vector<GroupFactorization> exact_factorizations(const FiniteGroup& g,
                                                     std::size_t max_order = kMaxSubgroupEnumerationOrder);

struct FactorizationCounts {
  std::size_t ordered = 0;
  std::size_t unordered = 0;
  std::size_t up_to_conjugacy = 0;  // ordered pairs modulo simultaneous conjugation
};

FactorizationCounts count_factorizations(const FiniteGroup& g, const std::vector<GroupFactorization>& list);

/// One representative per orbit under simultaneous conjugation.
std::vector<GroupFactorization> dedup_by_conjugacy(const FiniteGroup& g, const std::vector<GroupFactorization>& list);

struct ConjugacyClasses {
  std::vector<std::vector<Element>> classes;  // by size, then minimal element
  std::vector<std::size_t> class_of;
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

struct DoubleCoset {
  Element representative;        // minimal element
  std::vector<Element> elements;  // sorted
};

/// Partition of G into L1 g L2, ordered by representative.
std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& l1, const Subgroup& l2);

/// Left cosets x L, ordered by minimal representative.
std::vector<std::vector<Element>> left_cosets(const FiniteGroup& g, const Subgroup& l);

}  // namespace fusionfact
