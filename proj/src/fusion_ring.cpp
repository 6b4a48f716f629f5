#include "fusionfact/fusion_ring.hpp"

#include "sparse_tensor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace fusionfact {

namespace {

using detail::SparseTensor;

// Returns the first (j, k) where u fails to act as a two-sided unit.
std::optional<std::pair<std::size_t, std::size_t>> unit_failure(const SparseTensor& t, std::size_t n,
                                                                std::size_t u) {
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto* row : {&t.row(u, j), &t.row(j, u)}) {
      if (row->size() != 1 || row->front().first != j || row->front().second != 1) {
        std::size_t k = j;
        for (const auto& [kk, m] : *row) {
          if (kk != j || m != 1) {
            k = kk;
            break;
          }
        }
        return std::make_pair(j, k);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Violation> FusionRing::check(const RawRing& raw) {
  std::vector<Violation> out;
  const std::size_t n = raw.labels.size();
  if (n == 0) {
    out.push_back({ErrorCode::MalformedInput, {}, "ring has no basis elements"});
    return out;
  }
  if (raw.dual.size() != n) {
    out.push_back({ErrorCode::MalformedInput, {}, "dual list length differs from number of labels"});
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (raw.dual[i] >= n) {
      out.push_back({ErrorCode::IndexOutOfRange, {i}, "dual index out of range"});
      return out;
    }
  }
  {
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, fresh] = seen.emplace(raw.labels[i], i);
      if (!fresh) {
        out.push_back({ErrorCode::MalformedInput, {it->second, i}, "duplicate label '" + raw.labels[i] + "'"});
        return out;
      }
    }
  }
  {
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& e : raw.tensor) {
      if (e.i >= n || e.j >= n || e.k >= n) {
        out.push_back({ErrorCode::IndexOutOfRange, {e.i, e.j, e.k}, "tensor index out of range"});
        return out;
      }
      if (!seen.insert({e.i, e.j, e.k}).second) {
        out.push_back({ErrorCode::MalformedInput, {e.i, e.j, e.k}, "duplicate tensor entry"});
        return out;
      }
    }
  }
  if (raw.unit && *raw.unit >= n) {
    out.push_back({ErrorCode::IndexOutOfRange, {*raw.unit}, "unit index out of range"});
    return out;
  }

  const SparseTensor t(n, n, raw.tensor);
  const auto& dual = raw.dual;

  // Unit.
  std::optional<std::size_t> unit;
  if (raw.unit) {
    if (auto f = unit_failure(t, n, *raw.unit)) {
      out.push_back({ErrorCode::UnitAxiomViolation, {*raw.unit, f->first, f->second},
                     "designated unit does not act as identity"});
    } else {
      unit = raw.unit;
    }
  } else {
    for (std::size_t u = 0; u < n && !unit; ++u) {
      if (!unit_failure(t, n, u)) unit = u;
    }
    if (!unit) {
      auto f = unit_failure(t, n, 0);
      out.push_back({ErrorCode::UnitAxiomViolation, {0, f->first, f->second}, "no basis element acts as identity"});
    }
  }

  // Duality.
  for (std::size_t i = 0; i < n; ++i) {
    if (dual[dual[i]] != i) {
      out.push_back({ErrorCode::DualityViolation, {i, dual[i]}, "dual is not an involution"});
      break;
    }
  }
  if (unit) {
    bool bad = false;
    if (dual[*unit] != *unit) {
      out.push_back({ErrorCode::DualityViolation, {*unit}, "dual does not fix the unit"});
      bad = true;
    }
    for (std::size_t i = 0; i < n && !bad; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t want = (j == dual[i]) ? 1 : 0;
        if (t.get(i, j, *unit) != want) {
          out.push_back({ErrorCode::DualityViolation, {i, j, *unit},
                         "unit multiplicity in i*j must be 1 exactly when j = dual(i)"});
          bad = true;
          break;
        }
      }
    }
  }

  // Associativity: (i*j)*k == i*(j*k), compared coefficientwise.
  {
    std::vector<std::uint64_t> lhs(n), rhs(n);
    bool bad = false;
    for (std::size_t i = 0; i < n && !bad; ++i) {
      for (std::size_t j = 0; j < n && !bad; ++j) {
        for (std::size_t k = 0; k < n && !bad; ++k) {
          std::fill(lhs.begin(), lhs.end(), 0);
          std::fill(rhs.begin(), rhs.end(), 0);
          for (const auto& [m, a] : t.row(i, j))
            for (const auto& [l, b] : t.row(m, k)) lhs[l] += a * b;
          for (const auto& [m, a] : t.row(j, k))
            for (const auto& [l, b] : t.row(i, m)) rhs[l] += a * b;
          for (std::size_t l = 0; l < n; ++l) {
            if (lhs[l] != rhs[l]) {
              out.push_back({ErrorCode::AssociativityViolation, {i, j, k, l},
                             "(i*j)*k and i*(j*k) differ in coefficient of l"});
              bad = true;
              break;
            }
          }
        }
      }
    }
  }

  // Frobenius reciprocity.
  {
    bool bad = false;
    for (std::size_t i = 0; i < n && !bad; ++i) {
      for (std::size_t j = 0; j < n && !bad; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          auto v = t.get(i, j, k);
          if (v != t.get(dual[i], k, j) || v != t.get(k, dual[j], i)) {
            out.push_back({ErrorCode::ReciprocityViolation, {i, j, k},
                           "N_ij^k differs from N_{i*,k}^j or N_{k,j*}^i"});
            bad = true;
            break;
          }
        }
      }
    }
  }

  // Transitivity: the digraph j -> k (N_ij^k > 0 for some i) is strongly connected.
  {
    std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
    for (const auto& e : raw.tensor) {
      if (e.mult == 0) continue;
      fwd[e.j].push_back(e.k);
      bwd[e.k].push_back(e.j);
    }
    auto reach = [n](const std::vector<std::vector<std::size_t>>& g) {
      std::vector<bool> seen(n, false);
      std::queue<std::size_t> q;
      q.push(0);
      seen[0] = true;
      while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto w : g[v])
          if (!seen[w]) {
            seen[w] = true;
            q.push(w);
          }
      }
      return seen;
    };
    auto f = reach(fwd);
    auto b = reach(bwd);
    for (std::size_t v = 0; v < n; ++v) {
      if (!f[v] || !b[v]) {
        out.push_back({ErrorCode::NotTransitive, {0, v}, "left-multiplication graph is not strongly connected"});
        break;
      }
    }
  }
  return out;
}

FusionRing FusionRing::validate(const RawRing& raw) {
  auto violations = check(raw);
  if (!violations.empty()) {
    auto code = violations.front().code;
    throw Error(code, format_violations(violations), std::move(violations));
  }

  const std::size_t n = raw.labels.size();
  std::size_t u = 0;
  if (raw.unit) {
    u = *raw.unit;
  } else {
    const SparseTensor t(n, n, raw.tensor);
    while (unit_failure(t, n, u)) ++u;
  }

  auto data = std::make_shared<Data>();
  data->rank = n;
  data->input_order.push_back(u);
  for (std::size_t i = 0; i < n; ++i)
    if (i != u) data->input_order.push_back(i);
  std::vector<std::size_t> to_new(n);
  for (std::size_t c = 0; c < n; ++c) to_new[data->input_order[c]] = c;

  data->labels.resize(n);
  data->dual.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    data->labels[c] = raw.labels[data->input_order[c]];
    data->dual[c] = to_new[raw.dual[data->input_order[c]]];
  }
  for (const auto& e : raw.tensor) {
    if (e.mult == 0) continue;
    data->entries.push_back({to_new[e.i], to_new[e.j], to_new[e.k], e.mult});
  }
  std::sort(data->entries.begin(), data->entries.end());
  data->offsets.assign(n * n + 1, 0);
  for (const auto& e : data->entries) ++data->offsets[e.i * n + e.j + 1];
  std::partial_sum(data->offsets.begin(), data->offsets.end(), data->offsets.begin());
  return FusionRing(std::move(data));
}

std::optional<std::size_t> FusionRing::find_label(std::string_view label) const {
  const auto& ls = data_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ls.begin());
}

std::span<const TensorEntry> FusionRing::product(std::size_t i, std::size_t j) const {
  const auto n = data_->rank;
  if (i >= n || j >= n) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range", {i, j});
  const auto b = data_->offsets[i * n + j];
  const auto e = data_->offsets[i * n + j + 1];
  return std::span<const TensorEntry>(data_->entries).subspan(b, e - b);
}

std::uint64_t FusionRing::mult(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& e : product(i, j)) {
    if (e.k == k) return e.mult;
    if (e.k > k) break;
  }
  return 0;
}

std::uint64_t FusionRing::product_length(std::size_t i, std::size_t j) const {
  std::uint64_t s = 0;
  for (const auto& e : product(i, j)) s += e.mult;
  return s;
}

bool FusionRing::is_commutative() const {
  const auto n = rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto a = product(i, j);
      auto b = product(j, i);
      if (!std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](const TensorEntry& x, const TensorEntry& y) { return x.k == y.k && x.mult == y.mult; }))
        return false;
    }
  return true;
}

bool FusionRing::is_pointed() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (product_length(i, dual(i)) != 1) return false;
  return true;
}

RawRing FusionRing::to_raw() const {
  RawRing raw;
  raw.labels = data_->labels;
  raw.dual = data_->dual;
  raw.tensor = data_->entries;
  raw.unit = 0;
  return raw;
}

bool operator==(const FusionRing& a, const FusionRing& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->labels == b.data_->labels && a.data_->dual == b.data_->dual &&
         a.data_->entries == b.data_->entries;
}

IntMatrix fusion_matrix(const FusionRing& ring, std::size_t i) {
  const auto n = ring.rank();
  if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range", {i});
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& e : ring.product(i, j)) m[j][e.k] = static_cast<std::int64_t>(e.mult);
  return m;
}

FusionRing relabel(const FusionRing& ring, std::span<const std::size_t> perm) {
  const auto n = ring.rank();
  if (perm.size() != n) throw Error(ErrorCode::MalformedInput, "permutation has wrong length");
  std::vector<bool> hit(n, false);
  for (auto p : perm) {
    if (p >= n || hit[p]) throw Error(ErrorCode::MalformedInput, "not a permutation");
    hit[p] = true;
  }
  RawRing raw;
  raw.labels.resize(n);
  raw.dual.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    raw.labels[perm[i]] = ring.label(i);
    raw.dual[perm[i]] = perm[ring.dual(i)];
  }
  for (const auto& e : ring.entries()) raw.tensor.push_back({perm[e.i], perm[e.j], perm[e.k], e.mult});
  raw.unit = perm[0];
  return FusionRing::validate(raw);
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FusionRing& a, const FusionRing& b) {
  const auto n = a.rank();
  if (b.rank() != n || a.entries().size() != b.entries().size()) return std::nullopt;
  constexpr auto kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> p(n, kFree);
  std::vector<bool> used(n, false);
  p[0] = 0;
  used[0] = true;

  // Constants among assigned elements must agree on every triple touching `fresh`.
  auto consistent = [&](std::size_t fresh) {
    auto d = a.dual(fresh);
    if (p[d] != kFree && p[d] != b.dual(p[fresh])) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] == kFree) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (p[j] == kFree) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (p[k] == kFree || (i != fresh && j != fresh && k != fresh)) continue;
          if (a.mult(i, j, k) != b.mult(p[i], p[j], p[k])) return false;
        }
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t t = 1; t < n; ++t) {
      if (used[t]) continue;
      if (a.product_length(i, a.dual(i)) != b.product_length(t, b.dual(t))) continue;
      p[i] = t;
      used[t] = true;
      if (consistent(i) && self(self, i + 1)) return true;
      used[t] = false;
      p[i] = kFree;
    }
    return false;
  };
  if (!search(search, 1)) return std::nullopt;
  return p;
}

}  // namespace fusionfact
