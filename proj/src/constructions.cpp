#include "fusionfact/constructions.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "fusionfact/fp_data.hpp"

namespace fusionfact {

FusionRing vec_ring(const FiniteGroup& g) {
  RawRing raw;
  raw.labels = g.labels();
  raw.unit = 0;
  for (Element a = 0; a < g.order(); ++a) {
    raw.dual.push_back(g.inv(a));
    for (Element b = 0; b < g.order(); ++b) raw.tensor.push_back({a, b, g.mul(a, b), 1});
  }
  return FusionRing::validate(raw);
}

namespace {

constexpr double kCharacterTolerance = 1e-6;

std::int64_t round_checked(double x, ErrorCode code, const char* what) {
  const auto r = std::llround(x);
  if (std::abs(x - static_cast<double>(r)) >= kCharacterTolerance) throw Error(code, what);
  return r;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed) {
  if (g.order() > kMaxCharacterOrder)
    throw Error(ErrorCode::TooLarge, "character tables are limited to order 200", {g.order()});
  const auto n = static_cast<double>(g.order());
  CharacterTable table;
  table.seed_used = seed;
  table.classes = conjugacy_classes(g);
  const auto& cls = table.classes.classes;
  const auto r = cls.size();

  // c[i](j, k): coefficient of K_k in K_i K_j.
  std::vector<Eigen::MatrixXd> c(r, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::size_t> hits(r, 0);
      for (auto x : cls[i])
        for (auto y : cls[j]) ++hits[table.classes.class_of[g.mul(x, y)]];
      for (std::size_t k = 0; k < r; ++k)
        c[i](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
            static_cast<double>(hits[k] / cls[k].size());
    }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(0.0, 1.0);
  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (std::size_t i = 0; i < r; ++i) combo += coef(rng) * c[i];

  Eigen::EigenSolver<Eigen::MatrixXd> solver(combo);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::CharacterConvergenceFailure, "eigen solver failed");
  const Eigen::VectorXcd lambda = solver.eigenvalues();
  for (Eigen::Index a = 0; a < lambda.size(); ++a)
    for (Eigen::Index b = a + 1; b < lambda.size(); ++b)
      if (std::abs(lambda[a] - lambda[b]) < kCharacterTolerance)
        throw Error(ErrorCode::CharacterConvergenceFailure, "random class combination has a repeated eigenvalue");

  const Eigen::MatrixXcd vecs = solver.eigenvectors();
  std::vector<std::vector<std::complex<double>>> chars;
  std::vector<std::int64_t> degrees;
  for (std::size_t e = 0; e < r; ++e) {
    Eigen::VectorXcd w = vecs.col(static_cast<Eigen::Index>(e));
    if (std::abs(w[0]) < kCharacterTolerance)
      throw Error(ErrorCode::CharacterConvergenceFailure, "eigenvector vanishes on the identity class");
    w /= w[0];
    for (std::size_t i = 0; i < r; ++i) {
      const double res = (c[i].cast<std::complex<double>>() * w - w[static_cast<Eigen::Index>(i)] * w).norm();
      if (res > kCharacterTolerance * static_cast<double>(r) * n)
        throw Error(ErrorCode::CharacterConvergenceFailure, "eigenvector is not a common eigenvector");
    }
    double norm = 0.0;
    for (std::size_t k = 0; k < r; ++k) norm += std::norm(w[static_cast<Eigen::Index>(k)]) / static_cast<double>(cls[k].size());
    const double deg = std::sqrt(n / norm);
    degrees.push_back(round_checked(deg, ErrorCode::RoundingResidualTooLarge, "character degree is not an integer"));
    std::vector<std::complex<double>> chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = static_cast<double>(degrees.back()) * w[static_cast<Eigen::Index>(k)] / static_cast<double>(cls[k].size());
    chars.push_back(std::move(chi));
  }

  auto key = [&](std::size_t i) {
    std::vector<std::int64_t> k{degrees[i]};
    for (auto v : chars[i]) {
      k.push_back(std::llround(v.real() / kCharacterTolerance));
      k.push_back(std::llround(v.imag() / kCharacterTolerance));
    }
    return k;
  };
  auto is_trivial = [&](std::size_t i) {
    return std::all_of(chars[i].begin(), chars[i].end(),
                       [](std::complex<double> v) { return std::abs(v - 1.0) < kCharacterTolerance; });
  };
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (is_trivial(a) != is_trivial(b)) return is_trivial(a);
    return key(a) < key(b);
  });
  if (!is_trivial(order[0])) throw Error(ErrorCode::CharacterConvergenceFailure, "no trivial character found");
  for (auto i : order) {
    table.values.push_back(chars[i]);
    table.degrees.push_back(degrees[i]);
  }
  return table;
}

FusionRing rep_ring(const FiniteGroup& g, const CharacterTable& table) {
  const auto r = table.values.size();
  const auto& cls = table.classes.classes;
  const auto n = static_cast<double>(g.order());
  RawRing raw;
  raw.unit = 0;
  for (std::size_t i = 0; i < r; ++i) raw.labels.push_back("rho" + std::to_string(i));
  for (std::size_t i = 0; i < r; ++i) {
    std::optional<std::size_t> dual;
    for (std::size_t j = 0; j < r && !dual; ++j) {
      double diff = 0.0;
      for (std::size_t k = 0; k < cls.size(); ++k) diff = std::max(diff, std::abs(table.values[j][k] - std::conj(table.values[i][k])));
      if (diff < kCharacterTolerance) dual = j;
    }
    if (!dual) throw Error(ErrorCode::RoundingResidualTooLarge, "conjugate character not found", {i});
    raw.dual.push_back(*dual);
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        std::complex<double> s = 0.0;
        for (std::size_t c = 0; c < cls.size(); ++c)
          s += static_cast<double>(cls[c].size()) * table.values[i][c] * table.values[j][c] * std::conj(table.values[k][c]);
        s /= n;
        if (std::abs(s.imag()) >= kCharacterTolerance)
          throw Error(ErrorCode::RoundingResidualTooLarge, "fusion coefficient is not real", {i, j, k});
        const auto m = round_checked(s.real(), ErrorCode::RoundingResidualTooLarge, "fusion coefficient is not an integer");
        if (m < 0) throw Error(ErrorCode::RoundingResidualTooLarge, "negative fusion coefficient", {i, j, k});
        if (m > 0) raw.tensor.push_back({i, j, k, static_cast<std::uint64_t>(m)});
      }

  FusionRing ring = [&] {
    try {
      return FusionRing::validate(raw);
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationFailed, std::string("character ring failed validation: ") + e.what());
    }
  }();
  const auto fp = fp_data(ring);
  std::int64_t sum_sq = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (std::abs(fp.dims[i] - static_cast<double>(table.degrees[i])) > 1e-9)
      throw Error(ErrorCode::ValidationFailed, "FP dimension differs from character degree", {i});
    sum_sq += table.degrees[i] * table.degrees[i];
  }
  if (sum_sq != static_cast<std::int64_t>(g.order()))
    throw Error(ErrorCode::ValidationFailed, "squared degrees do not sum to |G|");
  return ring;
}

FusionRing rep_ring(const FiniteGroup& g, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    try {
      return rep_ring(g, character_table(g, seed + attempt));
    } catch (const Error& e) {
      const auto code = e.code();
      const bool retry = code == ErrorCode::CharacterConvergenceFailure ||
                         code == ErrorCode::RoundingResidualTooLarge || code == ErrorCode::ValidationFailed;
      if (!retry || attempt == 2) throw;
    }
  }
}

FusionModule coset_module(const FiniteGroup& g, const Subgroup& l) {
  const auto cosets = left_cosets(g, l);
  std::vector<std::size_t> coset_of(g.order());
  RawModule raw;
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    for (auto x : cosets[c]) coset_of[x] = c;
    raw.labels.push_back(g.label(cosets[c].front()) + "L");
  }
  for (Element a = 0; a < g.order(); ++a)
    for (std::size_t c = 0; c < cosets.size(); ++c) raw.action.push_back({a, c, coset_of[g.mul(a, cosets[c].front())], 1});
  std::sort(raw.action.begin(), raw.action.end());
  return FusionModule::validate(vec_ring(g), raw);
}

std::vector<GTSimple> gt_simples(const FiniteGroup& g, const Subgroup& l, std::uint64_t seed) {
  std::vector<GTSimple> out;
  for (const auto& dc : double_cosets(g, l, l)) {
    const auto stab = intersect_subgroups(g, l, conjugate_subgroup(g, l, dc.representative));
    if (stab.size() > kMaxStabilizerOrder)
      throw Error(ErrorCode::StabilizerTooLarge, "stabilizer too large for characters", {dc.representative, stab.size()});
    const auto index = static_cast<std::int64_t>(l.size() / stab.size());
    const auto ring = rep_ring(stab.as_group(g), seed);
    const auto fp = fp_data(ring);
    for (std::size_t i = 0; i < ring.rank(); ++i) {
      const auto dim = (*fp.integral_dims)[i];
      out.push_back({dc.representative, stab.elements(), i, dim, index * dim});
    }
  }
  std::int64_t sum = 0;
  for (const auto& s : out) sum += s.fpdim * s.fpdim;
  if (sum != static_cast<std::int64_t>(g.order()))
    throw Error(ErrorCode::IdentityFailure, "sum of squared simple dimensions differs from |G|",
                {static_cast<std::size_t>(sum), g.order()});
  return out;
}

PointedCertificate pointed_classify(const FiniteGroup& g, const Cochain& omega, const Subgroup& g1,
                                    const Subgroup& g2, const std::optional<Cochain>& omega2) {
  if (!(omega.group() == g) || omega.degree() != 3)
    throw Error(ErrorCode::MalformedInput, "omega must be a 3-cochain on G");
  PointedCertificate cert;
  cert.order_g = g.order();
  cert.order_g1 = g1.size();
  cert.order_g2 = g2.size();
  cert.g1 = g1.elements();
  cert.g2 = g2.elements();
  auto add = [&](std::string name, bool ok, std::string detail) {
    if (!ok) cert.failed_checks.push_back(name);
    cert.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const auto defect = cocycle_defect(omega);
  add("omega_is_cocycle", !defect, defect ? "d(omega) is nonzero" : "d(omega) = 0");

  const auto fact = check_group_factorization(g, g1, g2);
  add("exact_factorization", fact.exact,
      fact.exact ? "G = G1 G2 with G1 n G2 = {e}"
                 : "|G1||G2| = " + std::to_string(g1.size() * g2.size()) + ", |G| = " + std::to_string(g.order()) +
                       ", |G1 n G2| = " + std::to_string(intersect_subgroups(g, g1, g2).size()));

  if (defect) {
    add("trivial_on_g1", false, "skipped: omega is not a cocycle");
    add("restricts_to_omega2", false, "skipped: omega is not a cocycle");
  } else {
    const auto r1 = trivialize(restrict_cochain(omega, g1));
    cert.psi1 = r1.witness;
    add("trivial_on_g1", r1.witness.has_value(),
        r1.witness ? "d(psi1) = omega|G1" : "omega|G1 is not a coboundary mod " + std::to_string(r1.modulus));

    const auto w2 = restrict_cochain(omega, g2);
    if (omega2) {
      if (!(omega2->group() == w2.group()) || omega2->degree() != 3)
        throw Error(ErrorCode::MalformedInput, "omega2 must be a 3-cochain on G2");
      if (auto d2 = cocycle_defect(*omega2)) {
        add("restricts_to_omega2", false, "omega2 is not a cocycle");
      } else {
        const auto r2 = trivialize(w2 - *omega2);
        cert.psi2 = r2.witness;
        add("restricts_to_omega2", r2.witness.has_value(),
            r2.witness ? "omega|G2 - omega2 = d(psi2)" : "omega|G2 and omega2 are not cohomologous");
      }
    } else {
      // omega2 defaults to omega|G2; report the order of its class.
      std::size_t t = 1;
      for (; t <= g2.size(); ++t) {
        if (g2.size() % t != 0) continue;
        Cochain multiple(w2.group(), 3);
        for (std::size_t s = 0; s < t; ++s) multiple = multiple + w2;
        if (trivialize(multiple).witness) break;
      }
      cert.g2_class_order = t;
      add("restricts_to_omega2", true, "omega2 := omega|G2, class of order " + std::to_string(t));
    }
  }

  if (cert.failed_checks.empty()) {
    std::ostringstream os;
    os << "B = C(G, omega, G1, 1), FPdim(B) = |G| = " << g.order() << " = " << g1.size() << "*" << g2.size();
    cert.conclusion = os.str();
  }
  return cert;
}

}  // namespace fusionfact
