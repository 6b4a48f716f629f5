#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionfact/cochain.hpp"
#include "fusionfact/fusion_module.hpp"
#include "fusionfact/fusion_ring.hpp"
#include "fusionfact/group.hpp"

namespace fusionfact {

/// Group ring: basis G (same numbering), g*h = gh, dual(g) = g^-1.
FusionRing vec_ring(const FiniteGroup& g);

inline constexpr std::size_t kMaxCharacterOrder = 200;

struct CharacterTable {
  ConjugacyClasses classes;
  // values[i][c]: irreducible i on class c. Trivial first, then by degree,
  // then by rounded values.
  std::vector<std::vector<std::complex<double>>> values;
  std::vector<std::int64_t> degrees;
  std::uint64_t seed_used = 0;
};

/// Class-sum method: common eigenvectors of the class multiplication
/// matrices, found by diagonalizing a random combination drawn from `seed`.
/// Throws CharacterConvergenceFailure, RoundingResidualTooLarge, TooLarge.
CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed = 0);

/// Grothendieck ring of Rep(G); basis rho0 (trivial), rho1, ... in
/// character-table order. Retries seeds seed, seed+1, seed+2.
FusionRing rep_ring(const FiniteGroup& g, std::uint64_t seed = 0);
FusionRing rep_ring(const FiniteGroup& g, const CharacterTable& table);

/// Permutation module of vec_ring(G) on left cosets of L.
FusionModule coset_module(const FiniteGroup& g, const Subgroup& l);

struct GTSimple {
  Element coset_rep = 0;               // minimal element of L g L
  std::vector<Element> stabilizer;     // L n gLg^-1
  std::size_t stab_irrep = 0;          // index in character_table(stabilizer)
  std::int64_t stab_irrep_dim = 0;
  std::int64_t fpdim = 0;              // [L : L^g] * stab_irrep_dim
};

inline constexpr std::size_t kMaxStabilizerOrder = 200;

/// Simple objects of C(G, 1, L, 1) with their FP dimensions, ordered by
/// double coset representative then stabilizer irrep. The sum of fpdim^2
/// equals |G| (IdentityFailure otherwise). Throws StabilizerTooLarge.
std::vector<GTSimple> gt_simples(const FiniteGroup& g, const Subgroup& l, std::uint64_t seed = 0);

struct PointedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PointedCertificate {
  std::size_t order_g = 0, order_g1 = 0, order_g2 = 0;
  std::vector<Element> g1, g2;
  std::optional<Cochain> psi1;  // d(psi1) = omega|G1
  std::optional<Cochain> psi2;  // d(psi2) = omega|G2 - omega2
  std::optional<std::size_t> g2_class_order;  // order of [omega|G2] when omega2 is not given
  std::vector<PointedCheck> checks;
  std::vector<std::string> failed_checks;
  std::optional<std::string> conclusion;
};

/// Checks, in order: omega_is_cocycle, exact_factorization, trivial_on_g1,
/// restricts_to_omega2. `omega2` lives on G2 in its own numbering.
PointedCertificate pointed_classify(const FiniteGroup& g, const Cochain& omega, const Subgroup& g1,
                                    const Subgroup& g2, const std::optional<Cochain>& omega2 = std::nullopt);

}  // namespace fusionfact
