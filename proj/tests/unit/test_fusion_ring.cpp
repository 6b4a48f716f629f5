#include <doctest.h>

#include "fusionfact/builtins.hpp"
#include "fusionfact/fusion_ring.hpp"

using namespace fusionfact;

namespace {

RawRing z2_raw() {
  RawRing raw;
  raw.labels = {"1", "g"};
  raw.dual = {0, 1};
  raw.tensor = {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}};
  return raw;
}

RawRing ising_raw() { return ising_ring().to_raw(); }

bool has_code(const std::vector<Violation>& vs, ErrorCode c) {
  for (const auto& v : vs)
    if (v.code == c) return true;
  return false;
}

}  // namespace

TEST_CASE("Z/2 group ring validates") {
  const auto r = FusionRing::validate(z2_raw());
  CHECK(r.rank() == 2);
  CHECK(r.is_commutative());
  CHECK(r.is_pointed());
  CHECK(r.mult(1, 1, 0) == 1);
  CHECK(fusion_matrix(r, 1) == IntMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("Ising fusion matrices") {
  const auto r = ising_ring();
  CHECK(r.rank() == 3);
  CHECK(fusion_matrix(r, 2) == IntMatrix{{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
  CHECK(fusion_matrix(r, 0) == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(r.is_pointed());
  CHECK_THROWS_AS(fusion_matrix(r, 3), Error);
}

TEST_CASE("Ising with psi dropped from sigma*sigma is rejected with witnesses") {
  auto raw = ising_raw();
  std::erase_if(raw.tensor, [](const TensorEntry& e) { return e.i == 2 && e.j == 2 && e.k == 1; });
  const auto vs = FusionRing::check(raw);
  REQUIRE_FALSE(vs.empty());
  CHECK((has_code(vs, ErrorCode::AssociativityViolation) || has_code(vs, ErrorCode::ReciprocityViolation)));
  for (const auto& v : vs)
    if (v.code == ErrorCode::AssociativityViolation) CHECK(v.witness.size() == 4);
  try {
    FusionRing::validate(raw);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.violations().size() == vs.size());
    CHECK(e.code() == vs.front().code);
  }
}

TEST_CASE("reciprocity violation is reported") {
  // Unit, duality and associativity intact is hard to keep by hand; a lone
  // extra multiplicity breaks reciprocity among others.
  auto raw = ising_raw();
  for (auto& e : raw.tensor)
    if (e.i == 1 && e.j == 2 && e.k == 2) e.mult = 2;
  CHECK(has_code(FusionRing::check(raw), ErrorCode::ReciprocityViolation));
}

TEST_CASE("structural problems") {
  auto raw = z2_raw();
  raw.tensor.push_back({0, 0, 5, 1});
  CHECK(FusionRing::check(raw).front().code == ErrorCode::IndexOutOfRange);

  raw = z2_raw();
  raw.labels = {"a", "a"};
  CHECK(FusionRing::check(raw).front().code == ErrorCode::MalformedInput);

  raw = z2_raw();
  raw.unit = 1;
  CHECK(FusionRing::check(raw).front().code == ErrorCode::UnitAxiomViolation);

  raw = z2_raw();
  raw.dual = {1, 0};
  CHECK(has_code(FusionRing::check(raw), ErrorCode::DualityViolation));

  CHECK(FusionRing::check(RawRing{}).front().code == ErrorCode::MalformedInput);
}

TEST_CASE("unit is canonicalized to index 0") {
  // Z/2 with the unit listed second.
  RawRing raw;
  raw.labels = {"g", "1"};
  raw.dual = {0, 1};
  raw.tensor = {{1, 1, 1, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};
  const auto r = FusionRing::validate(raw);
  CHECK(r.label(0) == "1");
  CHECK(r.input_order() == std::vector<std::size_t>{1, 0});
  CHECK(r == FusionRing::validate(z2_raw()));
}

TEST_CASE("relabel and isomorphism search") {
  const auto r = builtin_ring("vecS3");
  const std::vector<std::size_t> perm{0, 3, 5, 1, 4, 2};
  const auto s = relabel(r, perm);
  CHECK(s.rank() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k) CHECK(r.mult(i, j, k) == s.mult(perm[i], perm[j], perm[k]));
  auto iso = find_isomorphism(r, s);
  REQUIRE(iso);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k) CHECK(r.mult(i, j, k) == s.mult((*iso)[i], (*iso)[j], (*iso)[k]));

  CHECK_FALSE(find_isomorphism(builtin_ring("vecC4"), builtin_ring("vecC2xC2")));
  CHECK(find_isomorphism(builtin_ring("vecC2*vecC3"), builtin_ring("vecC6")));
}

TEST_CASE("rank one ring") {
  RawRing raw;
  raw.labels = {"1"};
  raw.dual = {0};
  raw.tensor = {{0, 0, 0, 1}};
  const auto r = FusionRing::validate(raw);
  CHECK(r.rank() == 1);
  CHECK(r.to_raw().tensor.size() == 1);
}
