#include <doctest.h>

#include <set>

#include "fusionfact/group.hpp"

using namespace fusionfact;

namespace {

// Every subset closed under multiplication (finite, so a subgroup).
std::size_t brute_subgroup_count(const FiniteGroup& g) {
  const auto n = g.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (1ULL << n); mask += 2) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      if ((mask >> a) & 1)
        for (Element b = 0; b < n && ok; ++b)
          if (((mask >> b) & 1) && !((mask >> g.mul(a, b)) & 1)) ok = false;
    count += ok;
  }
  return count;
}

std::set<Element> product_set(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::set<Element> s;
  for (auto x : a.elements())
    for (auto y : b.elements()) s.insert(g.mul(x, y));
  return s;
}

}  // namespace

TEST_CASE("builtin orders") {
  CHECK(cyclic_group(7).order() == 7);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(quaternion_group().order() == 8);
  CHECK(builtin_group("C2xC3").order() == 6);
  CHECK(builtin_group("S3xC2").order() == 12);
  CHECK_THROWS_AS(builtin_group("Z9"), Error);
}

TEST_CASE("permutation composition convention") {
  const auto s3 = symmetric_group(3);
  CHECK(s3.label(0) == "()");
  // (0 1)(1 2) applied right to left sends 0->1, 1->2->... check via images.
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) {
      const auto& pa = s3.permutations()[a];
      const auto& pb = s3.permutations()[b];
      const auto& pab = s3.permutations()[s3.mul(a, b)];
      for (std::size_t x = 0; x < 3; ++x) CHECK(pab[x] == pa[pb[x]]);
    }
}

TEST_CASE("group properties") {
  CHECK(cyclic_group(6).is_abelian());
  CHECK_FALSE(symmetric_group(3).is_abelian());
  const auto q = quaternion_group();
  std::size_t involutions = 0;
  for (Element g = 0; g < 8; ++g) involutions += q.element_order(g) == 2;
  CHECK(involutions == 1);
  const auto d = dihedral_group(4);
  involutions = 0;
  for (Element g = 0; g < 8; ++g) involutions += d.element_order(g) == 2;
  CHECK(involutions == 5);
  for (Element g = 0; g < 8; ++g) CHECK(q.mul(g, q.inv(g)) == 0);
}

TEST_CASE("table validation") {
  CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
  // Identity not at 0.
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), Error);
  // Not a Latin square.
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);
  // Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table(loop);
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
    REQUIRE(e.witness().size() == 3);
    const auto& w = e.witness();
    CHECK(loop[loop[w[0]][w[1]]][w[2]] != loop[w[0]][loop[w[1]][w[2]]]);
  }
}

TEST_CASE("subgroup enumeration matches brute force") {
  for (const char* name : {"C6", "S3", "D4", "Q8", "C2xC2", "C8", "C2xC4", "C5"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    CHECK(enumerate_subgroups(g).size() == brute_subgroup_count(g));
  }
  CHECK(enumerate_subgroups(builtin_group("S3")).size() == 6);
  CHECK(enumerate_subgroups(builtin_group("C6")).size() == 4);
  CHECK(enumerate_subgroups(builtin_group("D4")).size() == 10);
  CHECK(enumerate_subgroups(builtin_group("S4")).size() == 30);
  CHECK(enumerate_subgroups(builtin_group("S5")).size() == 156);
  CHECK_THROWS_AS(enumerate_subgroups(builtin_group("S5"), 100), Error);
}

TEST_CASE("subgroup helpers") {
  const auto s3 = symmetric_group(3);
  CHECK_THROWS_AS(Subgroup::from_elements(s3, {0, 1, 2}), Error);
  const auto c3 = generated_subgroup(s3, std::vector<Element>{2});
  CHECK(c3.elements() == std::vector<Element>{0, 2, 5});
  const auto t = Subgroup::from_elements(s3, {0, 1});
  CHECK(conjugate_subgroup(s3, t, 2) != t);
  CHECK(intersect_subgroups(s3, t, c3) == trivial_subgroup(s3));
  CHECK(c3.as_group(s3).is_abelian());
  CHECK(c3.local_index(5) == 2);
}

TEST_CASE("group exact factorizations match product-set oracle") {
  for (const char* name : {"S3", "C6", "D4", "Q8", "C2xC2", "S4", "C2xC4"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto subs = enumerate_subgroups(g);
    std::set<std::pair<std::vector<Element>, std::vector<Element>>> expect;
    for (const auto& a : subs)
      for (const auto& b : subs)
        if (a.size() * b.size() == g.order() && product_set(g, a, b).size() == g.order())
          expect.insert({a.elements(), b.elements()});
    std::set<std::pair<std::vector<Element>, std::vector<Element>>> got;
    for (const auto& f : exact_factorizations(g)) {
      got.insert({f.g1.elements(), f.g2.elements()});
      REQUIRE(f.expression_table);
      for (Element x = 0; x < g.order(); ++x) {
        auto [a, b] = (*f.expression_table)[x];
        CHECK(g.mul(a, b) == x);
        CHECK(f.g1.contains(a));
        CHECK(f.g2.contains(b));
      }
    }
    CHECK(got == expect);
  }
}

TEST_CASE("factorization counts for S3") {
  const auto g = symmetric_group(3);
  const auto c = count_factorizations(g, exact_factorizations(g));
  // trivial/whole both ways, plus C3 with each of three transpositions, both ways.
  CHECK(c.ordered == 8);
  CHECK(c.unordered == 4);
  CHECK(c.up_to_conjugacy == 4);
  CHECK(dedup_by_conjugacy(g, exact_factorizations(g)).size() == 4);
  const auto non = check_group_factorization(g, Subgroup::from_elements(g, {0, 1}), Subgroup::from_elements(g, {0, 3}));
  CHECK_FALSE(non.exact);
  CHECK_FALSE(non.expression_table);
}

TEST_CASE("conjugacy classes") {
  auto sizes = [](const FiniteGroup& g) {
    std::vector<std::size_t> s;
    for (const auto& c : conjugacy_classes(g).classes) s.push_back(c.size());
    return s;
  };
  CHECK(sizes(symmetric_group(3)) == std::vector<std::size_t>{1, 2, 3});
  CHECK(sizes(symmetric_group(4)) == std::vector<std::size_t>{1, 3, 6, 6, 8});
  CHECK(sizes(quaternion_group()) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(sizes(cyclic_group(5)).size() == 5);
  const auto cc = conjugacy_classes(symmetric_group(4));
  for (std::size_t c = 0; c < cc.classes.size(); ++c)
    for (auto x : cc.classes[c]) CHECK(cc.class_of[x] == c);
}

TEST_CASE("cosets") {
  const auto s3 = symmetric_group(3);
  const auto t = Subgroup::from_elements(s3, {0, 1});
  const auto dc = double_cosets(s3, t, t);
  REQUIRE(dc.size() == 2);
  CHECK(dc[0].elements == std::vector<Element>{0, 1});
  CHECK(dc[1].elements.size() == 4);
  CHECK(dc[1].representative == 2);
  const auto lc = left_cosets(s3, t);
  CHECK(lc.size() == 3);
  std::set<Element> all;
  for (const auto& c : lc) all.insert(c.begin(), c.end());
  CHECK(all.size() == 6);
}

TEST_CASE("semidirect product C3 by inversion is S3") {
  const auto c3 = cyclic_group(3);
  const auto c2 = cyclic_group(2);
  const auto g = semidirect_product(c3, c2, {{0, 1, 2}, {0, 2, 1}});
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
  CHECK(conjugacy_classes(g).classes.size() == 3);
  CHECK_THROWS_AS(semidirect_product(c3, c2, {{0, 1, 2}, {0, 1, 1}}), Error);
}

TEST_CASE("direct product") {
  const auto g = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(g.order() == 6);
  CHECK(g.is_abelian());
  std::size_t max_order = 0;
  for (Element x = 0; x < 6; ++x) max_order = std::max(max_order, g.element_order(x));
  CHECK(max_order == 6);
}
