#include "fusionfact/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace fusionfact {

namespace {

std::vector<std::size_t> closure(const FusionRing& ring, std::span<const std::size_t> seed) {
  const auto n = ring.rank();
  std::vector<bool> in(n, false);
  std::vector<std::size_t> members;
  std::vector<std::size_t> queue;
  auto add = [&](std::size_t v) {
    if (v >= n) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range", {v});
    if (!in[v]) {
      in[v] = true;
      queue.push_back(v);
    }
  };
  add(FusionRing::unit());
  for (auto s : seed) add(s);
  while (!queue.empty()) {
    auto x = queue.back();
    queue.pop_back();
    members.push_back(x);
    add(ring.dual(x));
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      auto y = members[idx];
      for (const auto& e : ring.product(x, y)) add(e.k);
      for (const auto& e : ring.product(y, x)) add(e.k);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

bool FusionSubring::contains(std::size_t i) const {
  return std::binary_search(support_.begin(), support_.end(), i);
}

bool is_closed_support(const FusionRing& ring, std::span<const std::size_t> support) {
  auto has = [&](std::size_t v) { return std::binary_search(support.begin(), support.end(), v); };
  if (!has(FusionRing::unit())) return false;
  for (auto x : support) {
    if (x >= ring.rank() || !has(ring.dual(x))) return false;
    for (auto y : support)
      for (const auto& e : ring.product(x, y))
        if (!has(e.k)) return false;
  }
  return true;
}

FusionSubring FusionSubring::from_support(const FusionRing& ring, std::vector<std::size_t> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (!is_closed_support(ring, support)) throw Error(ErrorCode::NotSubring, "support is not a fusion subring", support);
  return FusionSubring(std::move(support));
}

FusionSubring subring_generated(const FusionRing& ring, std::span<const std::size_t> seed) {
  return FusionSubring(closure(ring, seed));
}

bool subring_less(const FusionSubring& a, const FusionSubring& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.support() < b.support();
}

std::vector<FusionSubring> enumerate_subrings(const FusionRing& ring, std::size_t max_rank) {
  const auto n = ring.rank();
  if (n > max_rank)
    throw Error(ErrorCode::RankBoundExceeded, "rank " + std::to_string(n) + " exceeds bound " + std::to_string(max_rank),
                {n, max_rank});
  std::set<std::vector<std::size_t>> found;
  if (n <= 12) {
    const std::size_t free = n - 1;  // non-unit elements 1..n-1
    for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
      std::vector<std::size_t> seed;
      for (std::size_t b = 0; b < free; ++b)
        if (mask & (std::size_t{1} << b)) seed.push_back(b + 1);
      found.insert(closure(ring, seed));
    }
  } else {
    std::vector<std::vector<std::size_t>> lattice;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t seed[] = {i};
      auto s = closure(ring, seed);
      if (found.insert(s).second) lattice.push_back(std::move(s));
    }
    for (bool grew = true; grew;) {
      grew = false;
      const auto count = lattice.size();
      for (std::size_t p = 0; p < count; ++p)
        for (std::size_t q = p + 1; q < count; ++q) {
          std::vector<std::size_t> u;
          std::set_union(lattice[p].begin(), lattice[p].end(), lattice[q].begin(), lattice[q].end(),
                         std::back_inserter(u));
          auto s = closure(ring, u);
          if (found.insert(s).second) {
            lattice.push_back(std::move(s));
            grew = true;
          }
        }
    }
  }
  std::vector<FusionSubring> out;
  for (const auto& s : found) out.push_back(FusionSubring::from_support(ring, s));
  std::sort(out.begin(), out.end(), subring_less);
  return out;
}

std::vector<std::size_t> product_support(const FusionRing& ring, const FusionSubring& a, const FusionSubring& c) {
  std::vector<bool> hit(ring.rank(), false);
  for (auto x : a.support())
    for (auto y : c.support())
      for (const auto& e : ring.product(x, y)) hit[e.k] = true;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ring.rank(); ++k)
    if (hit[k]) out.push_back(k);
  return out;
}

std::vector<std::size_t> intersect(const FusionSubring& a, const FusionSubring& c) {
  std::vector<std::size_t> d;
  std::set_intersection(a.support().begin(), a.support().end(), c.support().begin(), c.support().end(),
                        std::back_inserter(d));
  return d;
}

namespace {

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

bool close_rel(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max({std::abs(x), std::abs(y), 1.0});
}

}  // namespace

DimIdentityReport check_dim_identity(const FusionRing& ring, const FPData& fp, const FusionSubring& a,
                                     const FusionSubring& c, double tolerance) {
  DimIdentityReport r;
  r.d_support = intersect(a, c);
  r.ac_support = product_support(ring, a, c);
  const auto everything = all_indices(ring.rank());
  auto& d = r.dims;
  d.a = fp.dim_of(a.support());
  d.c = fp.dim_of(c.support());
  d.d = fp.dim_of(r.d_support);
  d.ac = fp.dim_of(r.ac_support);
  d.b = fp.dim_of(everything);
  r.relative_residual = std::abs(d.a * d.c - d.ac * d.d) / (d.b * d.b);
  r.support_is_full = r.ac_support.size() == ring.rank();

  if (fp.integral()) {
    SubringDims::Exact e{*fp.exact_dim_of(a.support()), *fp.exact_dim_of(c.support()), *fp.exact_dim_of(r.d_support),
                         *fp.exact_dim_of(r.ac_support), *fp.exact_dim_of(everything)};
    d.exact = e;
    r.identity_holds = e.a * e.c == e.ac * e.d;
    r.inequality_holds = e.b * e.d >= e.a * e.c;
    r.is_factorization = e.b * e.d == e.a * e.c;
  } else {
    r.identity_holds = r.relative_residual <= tolerance;
    r.inequality_holds = d.b * d.d >= d.a * d.c * (1.0 - tolerance);
    r.is_factorization = close_rel(d.b * d.d, d.a * d.c, tolerance);
  }

  if (!r.identity_holds)
    throw Error(ErrorCode::IdentityViolation,
                "FPdim(A)FPdim(C) != FPdim(AC)FPdim(D), relative residual " + std::to_string(r.relative_residual),
                a.support());
  if (!r.inequality_holds || r.is_factorization != r.support_is_full)
    throw Error(ErrorCode::IdentityViolation, "dimension equality case disagrees with support of AC", a.support());
  return r;
}

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::None: return "none";
    case FailureReason::NotSimple: return "not_simple";
    case FailureReason::NotInjective: return "not_injective";
    case FailureReason::NotSurjective: return "not_surjective";
  }
  return "unknown";
}

FactorizationReport is_exact_factorization(const FusionRing& ring, const FPData& fp, const FusionSubring& a,
                                           const FusionSubring& c, double tolerance) {
  const auto id = check_dim_identity(ring, fp, a, c, tolerance);
  FactorizationReport rep{a, c, id.d_support, id.ac_support, id.dims};
  rep.is_factorization = id.support_is_full;

  // Dimension criterion.
  const bool d_trivial = rep.d_support.size() == 1;
  bool dims_match;
  if (id.dims.exact) {
    dims_match = id.dims.exact->b == id.dims.exact->a * id.dims.exact->c;
  } else {
    dims_match = close_rel(id.dims.b, id.dims.a * id.dims.c, tolerance);
  }
  rep.is_exact_dim = d_trivial && dims_match;

  // Unique-expression criterion.
  const auto n = ring.rank();
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> preimage(n);
  std::optional<PairCounterexample> bad;
  for (auto x : a.support()) {
    for (auto y : c.support()) {
      auto prod = ring.product(x, y);
      if (prod.size() != 1 || prod.front().mult != 1) {
        PairCounterexample ce{FailureReason::NotSimple, x, y};
        for (const auto& e : prod) ce.decomposition.push_back({e.k, e.mult});
        bad = std::move(ce);
        break;
      }
      const auto z = prod.front().k;
      if (preimage[z]) {
        PairCounterexample ce{FailureReason::NotInjective, x, y};
        ce.decomposition.push_back({z, 1});
        ce.other_pair = preimage[z];
        bad = std::move(ce);
        break;
      }
      preimage[z] = std::make_pair(x, y);
      rep.bijection.push_back({x, y, z});
    }
    if (bad) break;
  }
  if (!bad) {
    for (std::size_t z = 0; z < n; ++z)
      if (!preimage[z]) {
        PairCounterexample ce{FailureReason::NotSurjective};
        ce.missed = z;
        bad = std::move(ce);
        break;
      }
  }
  rep.is_exact_unique = !bad;
  if (bad) {
    rep.bijection.clear();
    rep.counterexample = std::move(bad);
  }

  if (d_trivial && rep.counterexample &&
      (rep.counterexample->reason == FailureReason::NotSimple ||
       rep.counterexample->reason == FailureReason::NotInjective))
    invariant_failure("product of simples from subrings with trivial intersection is not simple or not unique",
                      {rep.counterexample->x, rep.counterexample->y});
  if (rep.is_exact_dim != rep.is_exact_unique)
    invariant_failure("dimension and unique-expression criteria for exactness disagree", a.support());
  return rep;
}

std::vector<FactorizationReport> enumerate_exact_factorizations(const FusionRing& ring, const FPData& fp,
                                                                std::size_t max_rank, double tolerance) {
  const auto subs = enumerate_subrings(ring, max_rank);
  std::vector<FactorizationReport> out;
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  for (const auto& a : subs)
    for (const auto& c : subs) {
      auto rep = is_exact_factorization(ring, fp, a, c, tolerance);
      if (rep.is_exact_dim) {
        seen.insert({a.support(), c.support()});
        out.push_back(std::move(rep));
      }
    }
  for (const auto& [a, c] : seen)
    if (!seen.count({c, a})) invariant_failure("exact factorization (A, C) without (C, A)", a);
  return out;
}

FusionRing subring_as_ring(const FusionRing& ring, const FusionSubring& s) {
  const auto& sup = s.support();
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < sup.size(); ++i) local[sup[i]] = i;
  RawRing raw;
  for (auto g : sup) {
    raw.labels.push_back(ring.label(g));
    raw.dual.push_back(local.at(ring.dual(g)));
  }
  for (auto x : sup)
    for (auto y : sup)
      for (const auto& e : ring.product(x, y)) raw.tensor.push_back({local.at(x), local.at(y), local.at(e.k), e.mult});
  raw.unit = 0;
  return FusionRing::validate(raw);
}

FusionRing deligne_product(const FusionRing& r1, const FusionRing& r2) {
  const auto n2 = r2.rank();
  RawRing raw;
  for (std::size_t i = 0; i < r1.rank(); ++i)
    for (std::size_t ip = 0; ip < n2; ++ip) {
      raw.labels.push_back(r1.label(i) + "*" + r2.label(ip));
      raw.dual.push_back(r1.dual(i) * n2 + r2.dual(ip));
    }
  for (const auto& e1 : r1.entries())
    for (const auto& e2 : r2.entries())
      raw.tensor.push_back({e1.i * n2 + e2.i, e1.j * n2 + e2.j, e1.k * n2 + e2.k, e1.mult * e2.mult});
  raw.unit = 0;
  return FusionRing::validate(raw);
}

DeligneShadow deligne_shadow_check(const FusionRing& ring, const FPData& fp, const FusionSubring& a,
                                   const FusionSubring& c, double tolerance) {
  const auto rep = is_exact_factorization(ring, fp, a, c, tolerance);
  if (!rep.is_exact_dim) throw Error(ErrorCode::NotExact, "pair is not an exact factorization", a.support());

  const auto n = ring.rank();
  std::vector<std::pair<std::size_t, std::size_t>> pre(n);
  for (const auto& [x, y, z] : rep.bijection) pre[z] = {x, y};

  DeligneShadow out;
  for (std::size_t z1 = 0; z1 < n; ++z1)
    for (std::size_t z2 = 0; z2 < n; ++z2)
      for (std::size_t z3 = 0; z3 < n; ++z3) {
        const auto [x1, y1] = pre[z1];
        const auto [x2, y2] = pre[z2];
        const auto [x3, y3] = pre[z3];
        if (ring.mult(z1, z2, z3) != ring.mult(x1, x2, x3) * ring.mult(y1, y2, y3)) {
          out.mismatch = std::array<std::size_t, 6>{x1, y1, x2, y2, x3, y3};
          return out;
        }
      }
  out.deligne_type = true;
  return out;
}

}  // namespace fusionfact
