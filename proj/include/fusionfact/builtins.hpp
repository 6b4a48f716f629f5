#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fusionfact/fusion_ring.hpp"

namespace fusionfact {

FusionRing ising_ring();      // 1, psi, sigma
FusionRing fibonacci_ring();  // 1, tau

/// "Ising", "Fibonacci", "vec<G>" and "rep<G>" for any builtin group name,
/// and Deligne products "R1*R2".
FusionRing builtin_ring(std::string_view name, std::uint64_t seed = 0);

/// Rings and groups exercised by the test corpus.
std::vector<std::string> corpus_ring_names();
std::vector<std::string> corpus_group_names();

}  // namespace fusionfact
