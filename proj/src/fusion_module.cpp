#include "fusionfact/fusion_module.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "sparse_tensor.hpp"

namespace fusionfact {

using detail::SparseTensor;

std::vector<std::vector<std::size_t>> action_components(std::size_t mrank, std::span<const TensorEntry> action) {
  std::vector<std::size_t> parent(mrank);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : action) {
    if (e.mult == 0 || e.j >= mrank || e.k >= mrank) continue;
    auto a = find(e.j), b = find(e.k);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> slot(mrank, mrank);
  for (std::size_t v = 0; v < mrank; ++v) {
    auto r = find(v);
    if (slot[r] == mrank) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

std::vector<Violation> FusionModule::check(const FusionRing& base, const RawModule& raw) {
  std::vector<Violation> out;
  const auto n = base.rank();
  const auto m = raw.labels.size();
  if (m == 0) {
    out.push_back({ErrorCode::MalformedInput, {}, "module has no basis elements"});
    return out;
  }
  {
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& e : raw.action) {
      if (e.i >= n || e.j >= m || e.k >= m) {
        out.push_back({ErrorCode::IndexOutOfRange, {e.i, e.j, e.k}, "action index out of range"});
        return out;
      }
      if (!seen.insert({e.i, e.j, e.k}).second) {
        out.push_back({ErrorCode::MalformedInput, {e.i, e.j, e.k}, "duplicate action entry"});
        return out;
      }
    }
  }
  const SparseTensor a(n, m, raw.action);

  for (std::size_t j = 0; j < m; ++j) {
    const auto& row = a.row(FusionRing::unit(), j);
    if (row.size() != 1 || row.front().first != j || row.front().second != 1) {
      out.push_back({ErrorCode::ActionAxiomViolation, {FusionRing::unit(), j}, "unit does not act as identity"});
      break;
    }
  }

  // Based-module reciprocity A_ij^k = A_{i*,k}^j.
  [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          if (a.get(i, j, k) != a.get(base.dual(i), k, j)) {
            out.push_back({ErrorCode::ActionAxiomViolation, {i, j, k}, "A_ij^k differs from A_{i*,k}^j"});
            return;
          }
  }();

  // X_i (X_i' M_j) = (X_i X_i') M_j.
  [&] {
    std::vector<std::uint64_t> lhs(m), rhs(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t ip = 0; ip < n; ++ip)
        for (std::size_t j = 0; j < m; ++j) {
          std::fill(lhs.begin(), lhs.end(), 0);
          std::fill(rhs.begin(), rhs.end(), 0);
          for (const auto& e : base.product(i, ip))
            for (const auto& [k, c] : a.row(e.k, j)) lhs[k] += e.mult * c;
          for (const auto& [mm, c1] : a.row(ip, j))
            for (const auto& [k, c2] : a.row(i, mm)) rhs[k] += c1 * c2;
          for (std::size_t k = 0; k < m; ++k)
            if (lhs[k] != rhs[k]) {
              out.push_back({ErrorCode::ActionAxiomViolation, {i, ip, j, k}, "action is not associative"});
              return;
            }
        }
  }();

  auto comps = action_components(m, raw.action);
  if (comps.size() > 1) {
    std::vector<std::size_t> component_of(m);
    std::ostringstream os;
    os << "components:";
    for (std::size_t c = 0; c < comps.size(); ++c) {
      os << " {";
      for (std::size_t v = 0; v < comps[c].size(); ++v) {
        component_of[comps[c][v]] = c;
        os << (v ? "," : "") << comps[c][v];
      }
      os << "}";
    }
    out.push_back({ErrorCode::Decomposable, component_of, os.str()});
  }
  return out;
}

FusionModule FusionModule::validate(const FusionRing& base, const RawModule& raw, const FpOptions& options) {
  auto violations = check(base, raw);
  if (!violations.empty()) {
    auto code = violations.front().code;
    throw Error(code, format_violations(violations), std::move(violations));
  }
  const auto fp = fp_data(base, options);
  const auto m = raw.labels.size();

  auto data = std::make_shared<Data>(Data{base, raw.labels, {}, {}, 0.0});
  for (const auto& e : raw.action)
    if (e.mult != 0) data->entries.push_back(e);
  std::sort(data->entries.begin(), data->entries.end());

  const auto& entries = data->entries;
  auto apply = [&entries](std::span<const double> x, std::span<double> y) {
    std::fill(y.begin(), y.end(), 0.0);
    for (const auto& e : entries) y[e.j] += static_cast<double>(e.mult) * x[e.k];
  };
  auto pr = perron_vector(m, apply, options);

  double norm2 = 0.0;
  for (double v : pr.vector) norm2 += v * v;
  const double scale = std::sqrt(fp.ring_dim / norm2);
  auto& md = data->mdims;
  md.resize(m);
  for (std::size_t j = 0; j < m; ++j) md[j] = pr.vector[j] * scale;

  // X_i R_M = FPdim(X_i) R_M, and R_A M_j = mdims[j] R_M.
  const auto n = base.rank();
  std::vector<std::vector<double>> xi(n, std::vector<double>(m, 0.0));
  std::vector<std::vector<double>> ra(m, std::vector<double>(m, 0.0));
  for (const auto& e : entries) {
    xi[e.i][e.j] += static_cast<double>(e.mult) * md[e.k];
    ra[e.j][e.k] += fp.dims[e.i] * static_cast<double>(e.mult);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) worst = std::max(worst, std::abs(xi[i][j] - fp.dims[i] * md[j]));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) worst = std::max(worst, std::abs(ra[j][k] - md[j] * md[k]));
  data->max_residual = worst;
  if (worst > options.tolerance)
    throw Error(ErrorCode::NormalizationFailure, "module FP eigen-identity residual " + std::to_string(worst));
  return FusionModule(std::move(data));
}

std::uint64_t FusionModule::action(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = std::lower_bound(data_->entries.begin(), data_->entries.end(), TensorEntry{i, j, k, 0});
  if (it != data_->entries.end() && it->i == i && it->j == j && it->k == k) return it->mult;
  return 0;
}

RawModule regular_module(const FusionRing& ring) {
  RawModule raw;
  raw.labels = ring.labels();
  raw.action.assign(ring.entries().begin(), ring.entries().end());
  return raw;
}

}  // namespace fusionfact
