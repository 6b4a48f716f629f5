#include <doctest.h>

#include <cmath>
#include <complex>
#include <set>

#include "fusionfact/builtins.hpp"
#include "fusionfact/constructions.hpp"
#include "fusionfact/factorization.hpp"

using namespace fusionfact;

namespace {

// Fusion ring from a real character table given by hand.
FusionRing ring_from_characters(const std::vector<std::size_t>& class_sizes,
                                const std::vector<std::vector<int>>& chi) {
  std::size_t order = 0;
  for (auto s : class_sizes) order += s;
  const auto n = chi.size();
  RawRing raw;
  for (std::size_t i = 0; i < n; ++i) raw.labels.push_back("x" + std::to_string(i));
  raw.dual.resize(n);
  for (std::size_t i = 0; i < n; ++i) raw.dual[i] = i;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        long s = 0;
        for (std::size_t c = 0; c < class_sizes.size(); ++c)
          s += static_cast<long>(class_sizes[c]) * chi[i][c] * chi[j][c] * chi[k][c];
        REQUIRE(s % static_cast<long>(order) == 0);
        if (s) raw.tensor.push_back({i, j, k, static_cast<std::uint64_t>(s / static_cast<long>(order))});
      }
  return FusionRing::validate(raw);
}

}  // namespace

TEST_CASE("vec ring of a group") {
  const auto g = symmetric_group(3);
  const auto r = vec_ring(g);
  CHECK(r.rank() == 6);
  CHECK(r.is_pointed());
  for (Element a = 0; a < 6; ++a) {
    CHECK(r.dual(a) == g.inv(a));
    for (Element b = 0; b < 6; ++b) CHECK(r.mult(a, b, g.mul(a, b)) == 1);
  }
}

TEST_CASE("Rep(S3) against the hand table") {
  const auto hand = ring_from_characters({1, 3, 2}, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}});
  const auto r = rep_ring(symmetric_group(3));
  CHECK(find_isomorphism(r, hand));
  const auto fp = fp_data(r);
  REQUIRE(fp.integral());
  CHECK(*fp.integral_dims == std::vector<std::int64_t>{1, 1, 2});
  CHECK(r.mult(2, 2, 0) == 1);
  CHECK(r.mult(2, 2, 1) == 1);
  CHECK(r.mult(2, 2, 2) == 1);
}

TEST_CASE("Rep(S4) against the hand table") {
  const auto hand = ring_from_characters(
      {1, 6, 3, 8, 6},
      {{1, 1, 1, 1, 1}, {1, -1, 1, 1, -1}, {2, 0, 2, -1, 0}, {3, 1, -1, 0, -1}, {3, -1, -1, 0, 1}});
  CHECK(find_isomorphism(rep_ring(symmetric_group(4)), hand));
}

TEST_CASE("Rep(D4) and Rep(Q8) coincide") {
  const auto d = rep_ring(dihedral_group(4));
  const auto q = rep_ring(quaternion_group());
  CHECK(find_isomorphism(d, q));
  CHECK(d == q);
}

TEST_CASE("Rep of an abelian group is the dual group ring") {
  for (std::size_t n : {2, 3, 5, 6}) CHECK(find_isomorphism(rep_ring(cyclic_group(n)), vec_ring(cyclic_group(n))));
  CHECK(find_isomorphism(rep_ring(builtin_group("C2xC2")), vec_ring(builtin_group("C2xC2"))));
}

TEST_CASE("character tables are orthonormal") {
  for (const char* name : {"S3", "S4", "D5", "Q8", "C6", "S5", "C2xC2"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto t = character_table(g, 0);
    const auto& cls = t.classes.classes;
    CHECK(t.values.size() == cls.size());
    std::int64_t sumsq = 0;
    for (auto d : t.degrees) sumsq += d * d;
    CHECK(sumsq == static_cast<std::int64_t>(g.order()));
    for (std::size_t i = 0; i < t.values.size(); ++i)
      for (std::size_t j = 0; j < t.values.size(); ++j) {
        std::complex<double> s = 0;
        for (std::size_t c = 0; c < cls.size(); ++c)
          s += static_cast<double>(cls[c].size()) * t.values[i][c] * std::conj(t.values[j][c]);
        s /= static_cast<double>(g.order());
        CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) < 1e-9);
      }
    for (std::size_t c = 0; c < cls.size(); ++c) CHECK(std::abs(t.values[0][c] - 1.0) < 1e-12);
  }
  CHECK(character_table(builtin_group("S4")).values.size() == 5);
  CHECK(character_table(builtin_group("D5")).values.size() == 4);
  CHECK(character_table(builtin_group("S5")).values.size() == 7);
}

TEST_CASE("character table does not depend on the seed") {
  const auto g = builtin_group("S4");
  const auto a = character_table(g, 0);
  const auto b = character_table(g, 12345);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    for (std::size_t c = 0; c < a.values[i].size(); ++c) CHECK(std::abs(a.values[i][c] - b.values[i][c]) < 1e-9);
}

TEST_CASE("coset modules") {
  const auto g = symmetric_group(3);
  for (const auto& l : enumerate_subgroups(g)) {
    const auto m = coset_module(g, l);
    CHECK(m.rank() == g.order() / l.size());
    for (double d : m.mdims()) CHECK(d == doctest::Approx(std::sqrt(static_cast<double>(l.size()))).epsilon(1e-9));
  }
}

TEST_CASE("group-theoretical simples") {
  const auto s3 = symmetric_group(3);
  auto dims = [](const std::vector<GTSimple>& v) {
    std::multiset<std::int64_t> s;
    for (const auto& x : v) s.insert(x.fpdim);
    return s;
  };
  CHECK(dims(gt_simples(s3, Subgroup::from_elements(s3, {0, 1}))) == std::multiset<std::int64_t>{1, 1, 2});
  // L trivial gives vec(G); L = G gives Rep(G).
  CHECK(dims(gt_simples(s3, trivial_subgroup(s3))) == std::multiset<std::int64_t>{1, 1, 1, 1, 1, 1});
  CHECK(dims(gt_simples(s3, whole_group(s3))) == std::multiset<std::int64_t>{1, 1, 2});
  // L = C3 is normal and abelian: two double cosets, each with stabilizer C3.
  CHECK(dims(gt_simples(s3, Subgroup::from_elements(s3, {0, 2, 5}))) == std::multiset<std::int64_t>{1, 1, 1, 1, 1, 1});
  const auto s4 = symmetric_group(4);
  CHECK(dims(gt_simples(s4, whole_group(s4))) == std::multiset<std::int64_t>{1, 1, 2, 3, 3});
}

TEST_CASE("sum of squared dims over every subgroup") {
  for (const char* name : {"S3", "D4", "Q8", "C6", "S4", "C2xC2"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    for (const auto& l : enumerate_subgroups(g)) {
      std::int64_t s = 0;
      for (const auto& x : gt_simples(g, l)) {
        s += x.fpdim * x.fpdim;
        CHECK(x.fpdim == static_cast<std::int64_t>(l.size() / x.stabilizer.size()) * x.stab_irrep_dim);
      }
      CHECK(s == static_cast<std::int64_t>(g.order()));
    }
  }
}

TEST_CASE("vec(G) factorizations are the group factorizations") {
  for (const char* name : {"S3", "D4", "Q8", "C6"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto r = vec_ring(g);
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> a, b;
    for (const auto& f : enumerate_exact_factorizations(r, fp_data(r))) a.insert({f.a.support(), f.c.support()});
    for (const auto& f : exact_factorizations(g))
      b.insert({std::vector<std::size_t>(f.g1.elements().begin(), f.g1.elements().end()),
                std::vector<std::size_t>(f.g2.elements().begin(), f.g2.elements().end())});
    CHECK(a == b);
  }
}

TEST_CASE("pointed classification on S3") {
  const auto g = symmetric_group(3);
  const auto g1 = Subgroup::from_elements(g, {0, 2, 5});
  const auto g2 = Subgroup::from_elements(g, {0, 1});
  const Cochain omega(g, 3);
  const auto cert = pointed_classify(g, omega, g1, g2);
  CHECK(cert.failed_checks.empty());
  REQUIRE(cert.conclusion);
  CHECK(cert.conclusion->find("6 = 3*2") != std::string::npos);
  REQUIRE(cert.psi1);
  CHECK(coboundary(*cert.psi1) == restrict_cochain(omega, g1));
  CHECK(cert.g2_class_order == std::size_t{1});

  const auto cert2 = pointed_classify(g, omega, g1, g2, Cochain(g2.as_group(g), 3));
  CHECK(cert2.failed_checks.empty());
}

TEST_CASE("pointed classification failures on C4") {
  const auto g = cyclic_group(4);
  const auto omega = cyclic_3cocycle(4, 1);
  const auto cert = pointed_classify(g, omega, Subgroup::from_elements(g, {0, 2}), trivial_subgroup(g));
  CHECK(cert.failed_checks == std::vector<std::string>{"exact_factorization", "trivial_on_g1"});
  CHECK_FALSE(cert.conclusion);

  // The class of the generating cocycle of C4 has order 4.
  const auto cert2 = pointed_classify(g, omega, trivial_subgroup(g), whole_group(g));
  CHECK(cert2.failed_checks.empty());
  CHECK(cert2.g2_class_order == std::size_t{4});

  // Non-cocycle input.
  auto bad = omega;
  bad[bad.size() - 1] += CircleValue(1, 8);
  CHECK_FALSE(pointed_classify(g, bad, trivial_subgroup(g), whole_group(g)).failed_checks.empty());
}
