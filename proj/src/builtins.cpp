#include "fusionfact/builtins.hpp"

#include "fusionfact/constructions.hpp"
#include "fusionfact/factorization.hpp"

namespace fusionfact {

FusionRing ising_ring() {
  RawRing raw;
  raw.labels = {"1", "psi", "sigma"};
  raw.dual = {0, 1, 2};
  raw.tensor = {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {1, 0, 1, 1}, {1, 1, 0, 1},
                {1, 2, 2, 1}, {2, 0, 2, 1}, {2, 1, 2, 1}, {2, 2, 0, 1}, {2, 2, 1, 1}};
  return FusionRing::validate(raw);
}

FusionRing fibonacci_ring() {
  RawRing raw;
  raw.labels = {"1", "tau"};
  raw.dual = {0, 1};
  raw.tensor = {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}};
  return FusionRing::validate(raw);
}

FusionRing builtin_ring(std::string_view name, std::uint64_t seed) {
  if (auto star = name.find('*'); star != std::string_view::npos)
    return deligne_product(builtin_ring(name.substr(0, star), seed), builtin_ring(name.substr(star + 1), seed));
  if (name == "Ising") return ising_ring();
  if (name == "Fibonacci") return fibonacci_ring();
  if (name.starts_with("vec")) return vec_ring(builtin_group(name.substr(3)));
  if (name.starts_with("rep")) return rep_ring(builtin_group(name.substr(3)), seed);
  throw Error(ErrorCode::MalformedInput, "unknown builtin ring '" + std::string(name) + "'");
}

std::vector<std::string> corpus_ring_names() {
  return {"vecC2",  "vecC3",  "vecC4",  "vecC5",  "vecC6",     "vecC7",          "vecC8",
          "vecS3",  "vecS4",  "vecD4",  "vecQ8",  "repS3",     "repD4",          "repQ8",
          "Ising",  "Fibonacci", "Ising*Fibonacci", "vecC2*repS3"};
}

std::vector<std::string> corpus_group_names() {
  return {"C2", "C3", "C4", "C5", "C6", "C7", "C8", "S3", "S4", "D4", "Q8"};
}

}  // namespace fusionfact
