// Prints one PASS/FAIL line per acceptance criterion.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fusionfact/builtins.hpp"
#include "fusionfact/cli.hpp"
#include "fusionfact/cochain.hpp"
#include "fusionfact/constructions.hpp"
#include "fusionfact/factorization.hpp"

using namespace fusionfact;

namespace {

constexpr std::size_t kMaxRank = 32;  // vec(S4) has rank 24

struct Criterion {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    } else if (!cond) {
      note += "; " + what;
    }
  }
};

int failures = 0;

void report(int n, const std::string& name, const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.note = std::string("exception: ") + e.what();
  }
  if (!c.ok) ++failures;
  std::printf("%s %d: %s%s%s\n", c.ok ? "PASS" : "FAIL", n, name.c_str(), c.note.empty() ? "" : " -- ",
              c.note.c_str());
  std::fflush(stdout);
}

std::multiset<std::int64_t> int_dims(const FusionRing& r) {
  const auto fp = fp_data(r);
  if (!fp.integral()) return {};
  return {fp.integral_dims->begin(), fp.integral_dims->end()};
}

std::multiset<std::int64_t> gt_dims(const FiniteGroup& g, const Subgroup& l) {
  std::multiset<std::int64_t> s;
  for (const auto& x : gt_simples(g, l)) s.insert(x.fpdim);
  return s;
}

std::string run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

Cochain random_cochain(const FiniteGroup& g, std::size_t k, std::mt19937_64& rng) {
  Cochain c(g, k);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto d = den(rng);
    c[i] = CircleValue(std::uniform_int_distribution<std::int64_t>(0, d - 1)(rng), d);
  }
  return c;
}

}  // namespace

int main() {
  const auto ring_names = corpus_ring_names();
  const auto group_names = corpus_group_names();

  report(1, "dimension identity on every ordered subring pair of the corpus", [&](Criterion& c) {
    std::size_t pairs = 0;
    double worst = 0;
    for (const auto& name : ring_names) {
      const auto r = builtin_ring(name);
      const auto fp = fp_data(r);
      const auto subs = enumerate_subrings(r, kMaxRank);
      for (const auto& a : subs)
        for (const auto& b : subs) {
          const auto rep = check_dim_identity(r, fp, a, b);
          worst = std::max(worst, rep.relative_residual);
          c.require(rep.relative_residual <= 1e-9, name + " residual");
          ++pairs;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu pairs, worst residual %.3g", pairs, worst);
    c.note = buf + (c.ok ? std::string() : "; " + c.note);
  });

  report(2, "dimension and unique-expression criteria agree", [&](Criterion& c) {
    std::size_t pairs = 0, exact = 0;
    for (const auto& name : ring_names) {
      const auto r = builtin_ring(name);
      const auto fp = fp_data(r);
      const auto subs = enumerate_subrings(r, kMaxRank);
      for (const auto& a : subs)
        for (const auto& b : subs) {
          const auto rep = is_exact_factorization(r, fp, a, b);
          c.require(rep.is_exact_dim == rep.is_exact_unique, name + " disagreement");
          exact += rep.is_exact_dim;
          ++pairs;
        }
    }
    if (c.ok) c.note = std::to_string(pairs) + " pairs, " + std::to_string(exact) + " exact";
  });

  report(3, "pinned exact factorization counts", [&](Criterion& c) {
    auto count = [](const std::string& name) {
      const auto r = builtin_ring(name);
      return enumerate_exact_factorizations(r, fp_data(r)).size();
    };
    const auto s3 = builtin_group("S3");
    const auto r = vec_ring(s3);
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> ring_side, group_side;
    for (const auto& f : enumerate_exact_factorizations(r, fp_data(r))) ring_side.insert({f.a.support(), f.c.support()});
    for (const auto& f : exact_factorizations(s3))
      group_side.insert({{f.g1.elements().begin(), f.g1.elements().end()}, {f.g2.elements().begin(), f.g2.elements().end()}});
    c.require(ring_side.size() == 8, "vec(S3) count " + std::to_string(ring_side.size()));
    c.require(ring_side == group_side, "vec(S3) differs from group enumeration");
    for (const char* name : {"vecC4", "Fibonacci", "Ising"}) {
      const auto r2 = builtin_ring(name);
      const auto list = enumerate_exact_factorizations(r2, fp_data(r2));
      bool trivial_only = list.size() == 2;
      for (const auto& f : list) trivial_only &= f.a.is_trivial() || f.c.is_trivial();
      c.require(trivial_only, std::string(name) + " count " + std::to_string(count(name)));
    }
  });

  report(4, "representation rings", [&](Criterion& c) {
    RawRing pinned;
    pinned.labels = {"rho0", "rho1", "rho2"};
    pinned.dual = {0, 1, 2};
    pinned.tensor = {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 2, 2, 1},
                     {2, 0, 2, 1}, {2, 1, 2, 1}, {2, 2, 0, 1}, {2, 2, 1, 1}, {2, 2, 2, 1}};
    const auto rs3 = rep_ring(builtin_group("S3"));
    c.require(rs3 == FusionRing::validate(pinned), "Rep(S3) differs from the pinned ring");
    c.require(int_dims(rs3) == std::multiset<std::int64_t>{1, 1, 2}, "Rep(S3) dims");
    c.require(rep_ring(builtin_group("D4")) == rep_ring(builtin_group("Q8")), "Rep(D4) != Rep(Q8)");
    for (const auto& name : group_names) {
      const auto g = builtin_group(name);
      const auto r = rep_ring(g);
      c.require(FusionRing::check(r.to_raw()).empty(), name + " fails validation");
      const auto fp = fp_data(r);
      std::int64_t s = 0;
      if (fp.integral())
        for (auto d : *fp.integral_dims) s += d * d;
      c.require(s == static_cast<std::int64_t>(g.order()), name + " sum of squares");
    }
  });

  report(5, "group-theoretical simple dimensions", [&](Criterion& c) {
    const auto s3 = builtin_group("S3");
    const auto t = gt_dims(s3, Subgroup::from_elements(s3, {0, 1}));
    c.require(t == std::multiset<std::int64_t>{1, 1, 2}, "S3 with a transposition");
    for (const auto& name : group_names) {
      const auto g = builtin_group(name);
      c.require(gt_dims(g, trivial_subgroup(g)) == int_dims(vec_ring(g)), name + " trivial L");
      c.require(gt_dims(g, whole_group(g)) == int_dims(rep_ring(g)), name + " L = G");
    }
    std::size_t pairs = 0;
    auto groups = group_names;
    for (const char* extra : {"D6", "C2xC2xC2", "C4xC4", "Q8xC3", "S3xC4", "S4xC2", "D12", "C3xS3"}) groups.push_back(extra);
    for (const auto& name : groups) {
      const auto g = builtin_group(name);
      if (g.order() > 48) continue;
      for (const auto& l : enumerate_subgroups(g)) {
        std::int64_t s = 0;
        for (const auto& x : gt_simples(g, l)) s += x.fpdim * x.fpdim;
        c.require(s == static_cast<std::int64_t>(g.order()), name + " subgroup of order " + std::to_string(l.size()));
        ++pairs;
      }
    }
    if (c.ok) c.note = std::to_string(pairs) + " (G, L) pairs";
  });

  report(6, "cohomology", [&](Criterion& c) {
    c.require(brute_classes(cyclic_group(2), 3, 4) == 2, "H3(C2; Z/4)");
    c.require(!trivialize(cyclic_3cocycle(2, 1)).witness, "cyclic_3cocycle(2,1) trivialized");
    for (std::size_t n = 1; n <= 6; ++n)
      c.require(trivialize(cyclic_3cocycle(n, 0)).witness.has_value(), "cyclic_3cocycle(n,0) rejected");
    const auto c4 = cyclic_group(4);
    const auto l = Subgroup::from_elements(c4, {0, 2});
    for (std::size_t q = 0; q < 4; ++q) {
      const bool trivial = trivialize(restrict_cochain(cyclic_3cocycle(4, q), l)).witness.has_value();
      c.require(trivial == (q % 2 == 0), "parity at q=" + std::to_string(q));
    }
    std::mt19937_64 rng(2024);
    std::size_t ok = 0;
    for (const char* name : {"S3", "C4"}) {
      const auto g = builtin_group(name);
      for (int i = 0; i < 100; ++i) {
        const auto psi = random_cochain(g, 2, rng);
        const auto omega = coboundary(psi);
        const auto res = trivialize(omega);
        const bool good = res.witness && coboundary(*res.witness) == omega;
        c.require(good, std::string(name) + " round trip");
        ok += good;
      }
    }
    if (c.ok) c.note = std::to_string(ok) + " round trips";
  });

  report(7, "coset module of S3 over a transposition", [&](Criterion& c) {
    const auto g = builtin_group("S3");
    const auto m = coset_module(g, Subgroup::from_elements(g, {0, 1}));
    c.require(action_components(m.rank(), m.entries()).size() == 1, "decomposable");
    double s = 0;
    for (double d : m.mdims()) {
      c.require(std::abs(d - std::sqrt(2.0)) <= 1e-9, "mdim not sqrt 2");
      s += d * d;
    }
    c.require(std::abs(s - 6.0) <= 1e-9, "sum of squares");
  });

  report(8, "pointed classification certificates", [&](Criterion& c) {
    const auto s3 = builtin_group("S3");
    const auto g2 = Subgroup::from_elements(s3, {0, 1});
    const auto pos = pointed_classify(s3, Cochain(s3, 3), Subgroup::from_elements(s3, {0, 2, 5}), g2,
                                      Cochain(g2.as_group(s3), 3));
    c.require(pos.failed_checks.empty() && pos.conclusion && pos.conclusion->find("6 = 3*2") != std::string::npos,
              "S3 certificate not positive");
    const auto c4 = cyclic_group(4);
    const auto neg1 =
        pointed_classify(c4, cyclic_3cocycle(4, 1), Subgroup::from_elements(c4, {0, 2}), trivial_subgroup(c4));
    c.require(!neg1.conclusion && !neg1.failed_checks.empty() && neg1.failed_checks.front() == "exact_factorization",
              "C4 example");
    const auto c2 = cyclic_group(2);
    const auto neg2 = pointed_classify(c2, cyclic_3cocycle(2, 1), whole_group(c2), trivial_subgroup(c2));
    c.require(!neg2.conclusion && neg2.failed_checks == std::vector<std::string>{"trivial_on_g1"}, "G1 = G example");
  });

  report(9, "Frobenius-Perron engine", [&](Criterion& c) {
    c.require(std::abs(fp_data(ising_ring()).dims[2] - std::sqrt(2.0)) <= 1e-9, "Ising sigma");
    c.require(std::abs(fp_data(fibonacci_ring()).dims[1] - (1 + std::sqrt(5.0)) / 2) <= 1e-9, "Fibonacci tau");
    for (const auto& name : ring_names) {
      if (name.rfind("vec", 0) != 0 || name.find('*') != std::string::npos) continue;
      const auto fp = fp_data(builtin_ring(name));
      bool ones = fp.integral();
      if (ones)
        for (auto d : *fp.integral_dims) ones &= d == 1;
      c.require(ones, name + " dims");
    }
  });

  report(10, "byte-identical CLI reports", [&](Criterion& c) {
    std::vector<std::vector<std::string>> cmds;
    for (const auto& name : ring_names) {
      const std::string r = "builtin:" + name;
      cmds.push_back({"ring", "validate", "--ring", r});
      cmds.push_back({"ring", "fpdim", "--ring", r});
      cmds.push_back({"ring", "subrings", "--ring", r, "--max-rank", "32"});
      cmds.push_back({"ring", "exact-factorizations", "--ring", r, "--max-rank", "32"});
      cmds.push_back({"ring", "deligne-shadow", "--ring", r, "--max-rank", "32"});
      cmds.push_back({"ring", "factorize", "--ring", r, "trivial", "all"});
    }
    cmds.push_back({"ring", "deligne", "builtin:Ising", "builtin:Fibonacci"});
    for (const auto& name : group_names) {
      cmds.push_back({"group", "subgroups", "--group", name});
      cmds.push_back({"group", "exact-factorizations", "--group", name});
      cmds.push_back({"group", "classes", "--group", name});
      cmds.push_back({"group", "double-cosets", "--group", name, "trivial", "all"});
      cmds.push_back({"construct", "vec-ring", name});
      cmds.push_back({"construct", "rep-ring", name});
      cmds.push_back({"construct", "coset-module", "--group", name, "trivial"});
      cmds.push_back({"construct", "gt-simples", "--group", name, "all"});
      cmds.push_back({"cocycle", "brute-classes", "--group", name, "2", "2"});
    }
    cmds.push_back({"cocycle", "cyclic", "4", "1"});
    cmds.push_back({"cocycle", "check", "--cochain", "cyclic3:1", "--group", "C4"});
    cmds.push_back({"cocycle", "restrict", "--cochain", "cyclic3:1", "--group", "C4", "0,2"});
    cmds.push_back({"cocycle", "trivialize", "--cochain", "cyclic3:2", "--group", "C4"});
    cmds.push_back({"construct", "pointed-classify", "--group", "S3", "--omega", "zero", "--g1", "0,2,5", "--g2", "0,1"});
    std::size_t failed_runs = 0;
    for (const auto& cmd : cmds) {
      const auto a = run_cli(cmd);
      const auto b = run_cli(cmd);
      std::string joined;
      for (const auto& s : cmd) joined += s + " ";
      c.require(a == b, "differs: " + joined);
      if (a.rfind("0\n", 0) != 0) {
        ++failed_runs;
        c.require(false, "nonzero exit: " + joined);
      }
    }
    if (c.ok) c.note = std::to_string(cmds.size()) + " commands";
  });

  return failures == 0 ? 0 : 1;
}
