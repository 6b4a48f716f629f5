#include "fusionfact/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "fusionfact/builtins.hpp"
#include "fusionfact/cochain.hpp"
#include "fusionfact/constructions.hpp"
#include "fusionfact/factorization.hpp"
#include "fusionfact/fp_data.hpp"
#include "fusionfact/io.hpp"

namespace fusionfact::cli {

namespace {

using io::json;
using io::format_real;

struct Options {
  std::string ring;
  std::string group;
  std::string cochain;
  std::string omega, omega2, g1, g2;
  double tolerance = 1e-9;
  bool json_flag = false;
  bool pretty = false;
  std::size_t max_rank = 16;
  std::size_t max_order = kMaxSubgroupEnumerationOrder;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> modulus;
  std::vector<std::string> pos;  // positional arguments of the chosen command
};

// Splits at commas outside parentheses.
std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  for (auto& s : out) {
    const auto b = s.find_first_not_of(' ');
    const auto e = s.find_last_not_of(' ');
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::size_t> resolve_tokens(std::string_view text, std::size_t bound,
                                        const std::function<std::optional<std::size_t>(std::string_view)>& by_label) {
  std::vector<std::size_t> out;
  for (const auto& tok : split_list(text)) {
    // Plain integers are indices, so labels such as "1" never shadow them.
    if (all_digits(tok)) {
      const auto v = std::stoull(tok);
      if (v >= bound) throw Error(ErrorCode::IndexOutOfRange, "index " + tok + " out of range");
      out.push_back(static_cast<std::size_t>(v));
    } else if (auto l = by_label(tok)) {
      out.push_back(*l);
    } else {
      throw Error(ErrorCode::MalformedInput, "unknown element '" + tok + "'");
    }
  }
  return out;
}

class Context {
 public:
  Context(Options& opt, std::istream& in) : opt_(opt), in_(in) {}

  json inputs = json::object();

  std::string read_source(const std::string& spec) {
    if (spec == "-") {
      if (!stdin_) {
        std::ostringstream os;
        os << in_.rdbuf();
        stdin_ = os.str();
      }
      return *stdin_;
    }
    std::ifstream f(spec, std::ios::binary);
    if (!f) throw Error(ErrorCode::MalformedInput, "cannot open '" + spec + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
  }

  json read_json(const std::string& spec) {
    const auto text = spec.starts_with("{") ? spec : read_source(spec);
    try {
      return json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedInput, "invalid JSON in '" + spec + "': " + e.what());
    }
  }

  RawRing load_raw_ring(const std::string& spec, const std::string& key = "ring") {
    if (spec.empty()) throw Error(ErrorCode::MalformedInput, "--ring is required");
    RawRing raw = spec.starts_with("builtin:") ? builtin_ring(spec.substr(8), opt_.seed).to_raw()
                                               : io::parse_ring(read_json(spec));
    json r = {{"labels", raw.labels}, {"dual", raw.dual}, {"tensor", json::array()}};
    for (const auto& e : raw.tensor) r["tensor"].push_back({e.i, e.j, e.k, e.mult});
    if (raw.unit) r["unit"] = *raw.unit;
    inputs[key] = std::move(r);
    return raw;
  }

  FusionRing load_ring(const std::string& spec, const std::string& key = "ring") {
    return FusionRing::validate(load_raw_ring(spec, key));
  }

  FiniteGroup load_group(const std::string& spec, const std::string& key = "group") {
    if (spec.empty()) throw Error(ErrorCode::MalformedInput, "--group is required");
    const bool file = spec == "-" || spec.starts_with("{") || spec.find('/') != std::string::npos ||
                      spec.ends_with(".json") || std::filesystem::exists(spec);
    auto g = file ? io::parse_group(read_json(spec)) : builtin_group(spec);
    inputs[key] = io::group_to_json(g);
    return g;
  }

  // "zero", "cyclic3:q", inline JSON, or a cochain file.
  Cochain load_cochain(const std::string& spec, const std::optional<FiniteGroup>& group, const std::string& key) {
    if (spec.empty()) throw Error(ErrorCode::MalformedInput, "a cochain argument is required");
    std::optional<Cochain> c;
    if (spec == "zero") {
      if (!group) throw Error(ErrorCode::MalformedInput, "'zero' needs a group");
      c = Cochain(*group, 3);
    } else if (spec.starts_with("cyclic3:")) {
      if (!group) throw Error(ErrorCode::MalformedInput, "'cyclic3:q' needs a cyclic group");
      const auto q = spec.substr(8);
      if (!all_digits(q)) throw Error(ErrorCode::MalformedInput, "bad cocycle parameter in '" + spec + "'");
      c = cyclic_3cocycle(group->order(), std::stoull(q));
      if (!(c->group() == *group)) throw Error(ErrorCode::MalformedInput, "cyclic3 needs the group C<n> in its standard numbering");
    } else {
      c = io::parse_cochain(read_json(spec), [](std::string_view n) { return builtin_group(n); }, group);
    }
    inputs[key] = io::cochain_to_json(*c);
    return *c;
  }

 private:
  Options& opt_;
  std::istream& in_;
  std::optional<std::string> stdin_;
};

FusionSubring parse_ring_subset(const FusionRing& ring, std::string_view text) {
  auto by_label = [&](std::string_view l) { return ring.find_label(l); };
  if (text == "trivial") return FusionSubring::from_support(ring, {FusionRing::unit()});
  if (text == "all") {
    std::vector<std::size_t> all(ring.rank());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return FusionSubring::from_support(ring, all);
  }
  if (text.starts_with("gen:")) {
    const auto seed = resolve_tokens(text.substr(4), ring.rank(), by_label);
    return subring_generated(ring, seed);
  }
  return FusionSubring::from_support(ring, resolve_tokens(text, ring.rank(), by_label));
}

Subgroup parse_subgroup(const FiniteGroup& g, std::string_view text) {
  auto by_label = [&](std::string_view l) -> std::optional<std::size_t> {
    const auto& labels = g.labels();
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
  };
  if (text == "trivial") return trivial_subgroup(g);
  if (text == "all") return whole_group(g);
  auto to_elements = [&](std::string_view t) {
    std::vector<Element> e;
    for (auto x : resolve_tokens(t, g.order(), by_label)) e.push_back(static_cast<Element>(x));
    return e;
  };
  if (text.starts_with("gen:")) return generated_subgroup(g, to_elements(text.substr(4)));
  return Subgroup::from_elements(g, to_elements(text));
}

json labels_of(const FusionRing& ring, const std::vector<std::size_t>& support) {
  json out = json::array();
  for (auto i : support) out.push_back(ring.label(i));
  return out;
}

json labels_of(const FiniteGroup& g, const std::vector<Element>& elems) {
  json out = json::array();
  for (auto x : elems) out.push_back(g.label(x));
  return out;
}

json reals(const std::vector<double>& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(format_real(x));
  return out;
}

json dims_json(const SubringDims& d) {
  json j = {{"A", format_real(d.a)}, {"C", format_real(d.c)}, {"D", format_real(d.d)},
            {"AC", format_real(d.ac)}, {"B", format_real(d.b)}};
  if (d.exact) {
    j["exact"] = {{"A", d.exact->a}, {"C", d.exact->c}, {"D", d.exact->d}, {"AC", d.exact->ac}, {"B", d.exact->b}};
  } else {
    j["exact"] = nullptr;
  }
  return j;
}

json factorization_json(const FusionRing& ring, const FactorizationReport& r) {
  json j;
  j["A"] = r.a.support();
  j["C"] = r.c.support();
  j["A_labels"] = labels_of(ring, r.a.support());
  j["C_labels"] = labels_of(ring, r.c.support());
  j["D"] = r.d_support;
  j["AC"] = r.ac_support;
  j["dims"] = dims_json(r.dims);
  j["is_factorization"] = r.is_factorization;
  j["is_exact_dim"] = r.is_exact_dim;
  j["is_exact_unique"] = r.is_exact_unique;
  j["is_exact"] = r.is_exact_dim && r.is_exact_unique;
  j["bijection"] = json::array();
  for (const auto& t : r.bijection) j["bijection"].push_back(t);
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    json cj = {{"reason", to_string(c.reason)}, {"x", c.x}, {"y", c.y}};
    cj["decomposition"] = json::array();
    for (const auto& [k, m] : c.decomposition) cj["decomposition"].push_back({k, m});
    cj["other_pair"] = c.other_pair ? json{c.other_pair->first, c.other_pair->second} : json(nullptr);
    cj["missed"] = c.missed ? json(*c.missed) : json(nullptr);
    j["counterexample"] = std::move(cj);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

json obstruction_json(const std::optional<SmithObstruction>& o) {
  if (!o) return nullptr;
  return {{"index", o->index}, {"invariant_factor", o->invariant_factor}, {"rhs", o->rhs}};
}

std::size_t positional_count(std::string_view text) {
  return all_digits(text) ? std::stoull(std::string(text)) : throw Error(ErrorCode::MalformedInput, "expected a nonnegative integer, got '" + std::string(text) + "'");
}

using Handler = std::function<int(Context&, Options&, json&)>;

// ---- ring ----

int ring_validate(Context& ctx, Options& o, json& rep) {
  const auto raw = ctx.load_raw_ring(o.ring);
  const auto violations = FusionRing::check(raw);
  if (!violations.empty()) {
    rep["valid"] = false;
    rep["violations"] = json::array();
    for (const auto& v : violations)
      rep["violations"].push_back({{"code", to_string(v.code)}, {"witness", v.witness}, {"detail", v.detail}});
    return 1;
  }
  const auto ring = FusionRing::validate(raw);
  rep["valid"] = true;
  rep["rank"] = ring.rank();
  rep["ring"] = io::ring_to_json(ring);
  rep["input_order"] = ring.input_order();
  rep["commutative"] = ring.is_commutative();
  rep["pointed"] = ring.is_pointed();
  return 0;
}

int ring_fpdim(Context& ctx, Options& o, json& rep) {
  const auto ring = ctx.load_ring(o.ring);
  FpOptions fo;
  fo.tolerance = o.tolerance;
  const auto fp = fp_data(ring, fo);
  rep["labels"] = ring.labels();
  rep["dims"] = reals(fp.dims);
  rep["regular"] = reals(fp.regular);
  rep["ring_dim"] = format_real(fp.ring_dim);
  rep["integral_dims"] = fp.integral_dims ? json(*fp.integral_dims) : json(nullptr);
  if (fp.integral_dims) {
    std::vector<std::size_t> all(ring.rank());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    rep["exact_ring_dim"] = *fp.exact_dim_of(all);
  } else {
    rep["exact_ring_dim"] = nullptr;
  }
  rep["max_residual"] = format_real(fp.max_residual);
  rep["tolerance_used"] = format_real(fp.tolerance_used);
  rep["iterations"] = fp.iterations;
  return 0;
}

int ring_subrings(Context& ctx, Options& o, json& rep) {
  const auto ring = ctx.load_ring(o.ring);
  const auto fp = fp_data(ring);
  const auto subs = enumerate_subrings(ring, o.max_rank);
  rep["count"] = subs.size();
  rep["subrings"] = json::array();
  for (const auto& s : subs) {
    auto e = fp.exact_dim_of(s.support());
    rep["subrings"].push_back({{"support", s.support()},
                               {"labels", labels_of(ring, s.support())},
                               {"fpdim", format_real(fp.dim_of(s.support()))},
                               {"exact_fpdim", e ? json(*e) : json(nullptr)}});
  }
  return 0;
}

int ring_factorize(Context& ctx, Options& o, json& rep) {
  if (o.pos.size() != 2) throw Error(ErrorCode::MalformedInput, "factorize needs subrings A and C");
  const auto ring = ctx.load_ring(o.ring);
  const auto fp = fp_data(ring);
  const auto a = parse_ring_subset(ring, o.pos[0]);
  const auto c = parse_ring_subset(ring, o.pos[1]);
  const auto id = check_dim_identity(ring, fp, a, c, o.tolerance);
  rep["report"] = factorization_json(ring, is_exact_factorization(ring, fp, a, c, o.tolerance));
  rep["lemma_residual"] = format_real(id.relative_residual);
  rep["inequality_holds"] = id.inequality_holds;
  return 0;
}

int ring_exact_factorizations(Context& ctx, Options& o, json& rep) {
  const auto ring = ctx.load_ring(o.ring);
  const auto fp = fp_data(ring);
  const auto list = enumerate_exact_factorizations(ring, fp, o.max_rank, o.tolerance);
  rep["count"] = list.size();
  rep["subring_count"] = enumerate_subrings(ring, o.max_rank).size();
  rep["pairs"] = json::array();
  for (const auto& r : list) {
    json bij = json::array();
    for (const auto& t : r.bijection) bij.push_back(t);
    rep["pairs"].push_back({{"A", r.a.support()},
                            {"C", r.c.support()},
                            {"A_labels", labels_of(ring, r.a.support())},
                            {"C_labels", labels_of(ring, r.c.support())},
                            {"bijection", std::move(bij)}});
  }
  return 0;
}

int ring_deligne(Context& ctx, Options& o, json& rep) {
  if (o.pos.size() != 2) throw Error(ErrorCode::MalformedInput, "deligne needs two rings");
  const auto r1 = ctx.load_ring(o.pos[0], "ring1");
  const auto r2 = ctx.load_ring(o.pos[1], "ring2");
  rep = io::ring_to_json(deligne_product(r1, r2));
  return 0;
}

int ring_deligne_shadow(Context& ctx, Options& o, json& rep) {
  const auto ring = ctx.load_ring(o.ring);
  const auto fp = fp_data(ring);
  std::vector<std::pair<FusionSubring, FusionSubring>> pairs;
  if (o.pos.size() == 2) {
    pairs.emplace_back(parse_ring_subset(ring, o.pos[0]), parse_ring_subset(ring, o.pos[1]));
  } else if (o.pos.empty()) {
    for (const auto& r : enumerate_exact_factorizations(ring, fp, o.max_rank, o.tolerance)) pairs.emplace_back(r.a, r.c);
  } else {
    throw Error(ErrorCode::MalformedInput, "deligne-shadow takes either no subrings or A and C");
  }
  rep["label"] = DeligneShadow::kLabel;
  rep["results"] = json::array();
  for (const auto& [a, c] : pairs) {
    const auto s = deligne_shadow_check(ring, fp, a, c, o.tolerance);
    rep["results"].push_back({{"A", a.support()},
                              {"C", c.support()},
                              {"deligne_type", s.deligne_type},
                              {"mismatch", s.mismatch ? json(*s.mismatch) : json(nullptr)}});
  }
  return 0;
}

// ---- group ----

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x)
    for (auto a : h.elements())
      if (!h.contains(g.conj(x, a))) return false;
  return true;
}

int group_subgroups(Context& ctx, Options& o, json& rep) {
  const auto g = ctx.load_group(o.group);
  const auto subs = enumerate_subgroups(g, o.max_order);
  rep["order"] = g.order();
  rep["count"] = subs.size();
  rep["subgroups"] = json::array();
  for (const auto& s : subs)
    rep["subgroups"].push_back({{"elements", s.elements()},
                                {"labels", labels_of(g, s.elements())},
                                {"order", s.size()},
                                {"normal", is_normal(g, s)}});
  return 0;
}

int group_exact_factorizations(Context& ctx, Options& o, json& rep) {
  const auto g = ctx.load_group(o.group);
  const auto list = exact_factorizations(g, o.max_order);
  const auto counts = count_factorizations(g, list);
  rep["order"] = g.order();
  rep["counts"] = {{"ordered", counts.ordered}, {"unordered", counts.unordered}, {"up_to_conjugacy", counts.up_to_conjugacy}};
  auto pairs = [&](const std::vector<GroupFactorization>& l) {
    json out = json::array();
    for (const auto& f : l) out.push_back({{"G1", f.g1.elements()}, {"G2", f.g2.elements()}});
    return out;
  };
  rep["pairs"] = pairs(list);
  rep["pairs_up_to_conjugacy"] = pairs(dedup_by_conjugacy(g, list));
  return 0;
}

int group_classes(Context& ctx, Options& o, json& rep) {
  const auto g = ctx.load_group(o.group);
  const auto cc = conjugacy_classes(g);
  rep["order"] = g.order();
  rep["count"] = cc.classes.size();
  rep["classes"] = json::array();
  for (const auto& c : cc.classes)
    rep["classes"].push_back({{"elements", c}, {"labels", labels_of(g, c)}, {"size", c.size()}});
  return 0;
}

int group_double_cosets(Context& ctx, Options& o, json& rep) {
  if (o.pos.size() != 2) throw Error(ErrorCode::MalformedInput, "double-cosets needs subgroups L1 and L2");
  const auto g = ctx.load_group(o.group);
  const auto l1 = parse_subgroup(g, o.pos[0]);
  const auto l2 = parse_subgroup(g, o.pos[1]);
  rep["L1"] = l1.elements();
  rep["L2"] = l2.elements();
  rep["double_cosets"] = json::array();
  for (const auto& dc : double_cosets(g, l1, l2))
    rep["double_cosets"].push_back({{"representative", dc.representative}, {"elements", dc.elements}});
  return 0;
}

// ---- cocycle ----

std::optional<FiniteGroup> optional_group(Context& ctx, const Options& o) {
  if (o.group.empty()) return std::nullopt;
  return ctx.load_group(o.group);
}

int cocycle_check(Context& ctx, Options& o, json& rep) {
  const auto c = ctx.load_cochain(o.cochain, optional_group(ctx, o), "cochain");
  const auto defect = cocycle_defect(c);
  rep["degree"] = c.degree();
  rep["group_order"] = c.group().order();
  rep["is_cocycle"] = !defect;
  rep["defect"] = defect ? json(*defect) : json(nullptr);
  rep["normalized"] = c.is_normalized();
  rep["common_denominator"] = c.common_denominator();
  return 0;
}

int cocycle_restrict(Context& ctx, Options& o, json& rep) {
  if (o.pos.size() != 1) throw Error(ErrorCode::MalformedInput, "restrict needs a subgroup L");
  const auto c = ctx.load_cochain(o.cochain, optional_group(ctx, o), "cochain");
  const auto l = parse_subgroup(c.group(), o.pos[0]);
  const auto r = restrict_cochain(c, l);
  rep["subgroup"] = l.elements();
  rep["cochain"] = io::cochain_to_json(r);
  rep["is_cocycle"] = is_cocycle(r);
  return 0;
}

int cocycle_trivialize(Context& ctx, Options& o, json& rep) {
  const auto c = ctx.load_cochain(o.cochain, optional_group(ctx, o), "cochain");
  const auto t = trivialize(c, o.modulus);
  rep["trivial"] = t.witness.has_value();
  rep["modulus"] = t.modulus;
  rep["rank"] = t.rank;
  rep["witness"] = t.witness ? io::cochain_to_json(*t.witness) : json(nullptr);
  rep["obstruction"] = obstruction_json(t.obstruction);
  return 0;
}

int cocycle_cyclic(Context&, Options& o, json& rep) {
  if (o.pos.size() != 2) throw Error(ErrorCode::MalformedInput, "cyclic needs n and q");
  rep = io::cochain_to_json(cyclic_3cocycle(positional_count(o.pos[0]), positional_count(o.pos[1])));
  return 0;
}

int cocycle_brute_classes(Context& ctx, Options& o, json& rep) {
  if (o.pos.size() != 2) throw Error(ErrorCode::MalformedInput, "brute-classes needs k and m");
  const auto g = ctx.load_group(o.group);
  const auto k = positional_count(o.pos[0]);
  const auto m = static_cast<std::int64_t>(positional_count(o.pos[1]));
  rep["group_order"] = g.order();
  rep["degree"] = k;
  rep["modulus"] = m;
  rep["classes"] = brute_classes(g, k, m);
  return 0;
}

// ---- construct ----

FiniteGroup construct_group(Context& ctx, const Options& o) {
  if (!o.pos.empty()) return ctx.load_group(o.pos[0]);
  return ctx.load_group(o.group);
}

int construct_vec_ring(Context& ctx, Options& o, json& rep) {
  rep = io::ring_to_json(vec_ring(construct_group(ctx, o)));
  return 0;
}

int construct_rep_ring(Context& ctx, Options& o, json& rep) {
  rep = io::ring_to_json(rep_ring(construct_group(ctx, o), o.seed));
  return 0;
}

int construct_coset_module(Context& ctx, Options& o, json& rep) {
  if (o.pos.size() != 1) throw Error(ErrorCode::MalformedInput, "coset-module needs a subgroup L");
  const auto g = ctx.load_group(o.group);
  rep = io::module_to_json(coset_module(g, parse_subgroup(g, o.pos[0])));
  return 0;
}

int construct_gt_simples(Context& ctx, Options& o, json& rep) {
  if (o.pos.size() != 1) throw Error(ErrorCode::MalformedInput, "gt-simples needs a subgroup L");
  const auto g = ctx.load_group(o.group);
  const auto l = parse_subgroup(g, o.pos[0]);
  const auto simples = gt_simples(g, l, o.seed);
  rep["order"] = g.order();
  rep["L"] = l.elements();
  rep["simples"] = json::array();
  std::int64_t sum = 0;
  for (const auto& s : simples) {
    sum += s.fpdim * s.fpdim;
    rep["simples"].push_back({{"coset_rep", s.coset_rep},
                              {"stabilizer", s.stabilizer},
                              {"stab_irrep", s.stab_irrep},
                              {"stab_irrep_dim", s.stab_irrep_dim},
                              {"fpdim", s.fpdim}});
  }
  rep["sum_fpdim_squared"] = sum;
  return 0;
}

int construct_pointed_classify(Context& ctx, Options& o, json& rep) {
  const auto g = ctx.load_group(o.group);
  const auto omega = ctx.load_cochain(o.omega, g, "omega");
  if (o.g1.empty() || o.g2.empty()) throw Error(ErrorCode::MalformedInput, "--g1 and --g2 are required");
  const auto g1 = parse_subgroup(g, o.g1);
  const auto g2 = parse_subgroup(g, o.g2);
  std::optional<Cochain> omega2;
  if (!o.omega2.empty()) omega2 = ctx.load_cochain(o.omega2, g2.as_group(g), "omega2");
  const auto cert = pointed_classify(g, omega, g1, g2, omega2);
  rep["orders"] = {{"G", cert.order_g}, {"G1", cert.order_g1}, {"G2", cert.order_g2}};
  rep["G1"] = cert.g1;
  rep["G2"] = cert.g2;
  rep["checks"] = json::array();
  for (const auto& c : cert.checks) rep["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  rep["failed_checks"] = cert.failed_checks;
  rep["psi1"] = cert.psi1 ? io::cochain_to_json(*cert.psi1) : json(nullptr);
  rep["psi2"] = cert.psi2 ? io::cochain_to_json(*cert.psi2) : json(nullptr);
  rep["g2_class_order"] = cert.g2_class_order ? json(*cert.g2_class_order) : json(nullptr);
  rep["positive"] = cert.conclusion.has_value();
  rep["conclusion"] = cert.conclusion ? json(*cert.conclusion) : json(nullptr);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Fusion rings, exact factorizations, and group-theoretical data", "fusionfact"};
  app.require_subcommand(1);

  std::string chosen;
  Handler handler;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--tolerance", opt.tolerance, "Numerical tolerance")->capture_default_str();
    c->add_flag("--json", opt.json_flag, "Compact JSON output (default)");
    c->add_flag("--pretty", opt.pretty, "Indented JSON output");
    c->add_option("--max-rank", opt.max_rank, "Largest rank for subring enumeration")->capture_default_str();
    c->add_option("--max-order", opt.max_order, "Largest group order for subgroup enumeration")->capture_default_str();
    c->add_option("--seed", opt.seed, "Seed for the character method")->capture_default_str();
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, Handler h) {
    auto* c = parent->add_subcommand(name, desc);
    add_common(c);
    c->callback([&, name, parent, h] {
      chosen = parent->get_name() + " " + name;
      handler = h;
    });
    return c;
  };
  auto positional = [&](CLI::App* c, const std::string& name, std::size_t count, bool required) {
    auto* p = c->add_option(name, opt.pos, "Positional arguments");
    p->expected(required ? static_cast<int>(count) : 0, static_cast<int>(count));
    if (required) p->required();
  };
  auto with_ring = [&](CLI::App* c) { c->add_option("--ring", opt.ring, "PATH, builtin:NAME, or - for stdin")->required(); };
  auto with_group = [&](CLI::App* c, bool required) {
    auto* g = c->add_option("--group", opt.group, "PATH, builtin NAME, or - for stdin");
    if (required) g->required();
  };

  auto* ring = app.add_subcommand("ring", "Fusion ring commands")->require_subcommand(1);
  with_ring(leaf(ring, "validate", "Check the fusion ring axioms", ring_validate));
  with_ring(leaf(ring, "fpdim", "Frobenius-Perron dimensions", ring_fpdim));
  with_ring(leaf(ring, "subrings", "Enumerate fusion subrings", ring_subrings));
  {
    auto* c = leaf(ring, "factorize", "Decide whether A C is an exact factorization", ring_factorize);
    with_ring(c);
    positional(c, "subrings", 2, true);
  }
  with_ring(leaf(ring, "exact-factorizations", "All ordered exact factorizations", ring_exact_factorizations));
  positional(leaf(ring, "deligne", "Deligne product of two rings", ring_deligne), "rings", 2, true);
  {
    auto* c = leaf(ring, "deligne-shadow", "Ring-level Deligne check of exact factorizations", ring_deligne_shadow);
    with_ring(c);
    positional(c, "subrings", 2, false);
  }

  auto* group = app.add_subcommand("group", "Finite group commands")->require_subcommand(1);
  with_group(leaf(group, "subgroups", "Enumerate subgroups", group_subgroups), true);
  with_group(leaf(group, "exact-factorizations", "Exact factorizations G = G1 G2", group_exact_factorizations), true);
  with_group(leaf(group, "classes", "Conjugacy classes", group_classes), true);
  {
    auto* c = leaf(group, "double-cosets", "Double cosets L1 g L2", group_double_cosets);
    with_group(c, true);
    positional(c, "subgroups", 2, true);
  }

  auto* cocycle = app.add_subcommand("cocycle", "Cochains with values in Q/Z")->require_subcommand(1);
  auto with_cochain = [&](CLI::App* c) {
    c->add_option("--cochain", opt.cochain, "PATH, inline JSON, zero, or cyclic3:q")->required();
    with_group(c, false);
  };
  with_cochain(leaf(cocycle, "check", "Cocycle condition", cocycle_check));
  {
    auto* c = leaf(cocycle, "restrict", "Restrict to a subgroup", cocycle_restrict);
    with_cochain(c);
    positional(c, "subgroup", 1, true);
  }
  {
    auto* c = leaf(cocycle, "trivialize", "Solve d(psi) = omega", cocycle_trivialize);
    with_cochain(c);
    c->add_option("--modulus", opt.modulus, "Coefficient modulus override");
  }
  positional(leaf(cocycle, "cyclic", "Standard 3-cocycle on C<n>", cocycle_cyclic), "n_q", 2, true);
  {
    auto* c = leaf(cocycle, "brute-classes", "Count cohomology classes by linear algebra", cocycle_brute_classes);
    with_group(c, true);
    positional(c, "k_m", 2, true);
  }

  auto* construct = app.add_subcommand("construct", "Rings and data built from groups")->require_subcommand(1);
  for (auto [name, desc, h] : {std::tuple{"vec-ring", "Group ring of G", Handler(construct_vec_ring)},
                               std::tuple{"rep-ring", "Representation ring of G", Handler(construct_rep_ring)}}) {
    auto* c = leaf(construct, name, desc, h);
    with_group(c, false);
    positional(c, "group_name", 1, false);
  }
  {
    auto* c = leaf(construct, "coset-module", "Coset module of vec(G) on G/L", construct_coset_module);
    with_group(c, true);
    positional(c, "subgroup", 1, true);
  }
  {
    auto* c = leaf(construct, "gt-simples", "Simple objects of C(G, 1, L, 1)", construct_gt_simples);
    with_group(c, true);
    positional(c, "subgroup", 1, true);
  }
  {
    auto* c = leaf(construct, "pointed-classify", "Certificate for a pointed exact factorization", construct_pointed_classify);
    with_group(c, true);
    c->add_option("--omega", opt.omega, "3-cocycle on G")->required();
    c->add_option("--g1", opt.g1, "Subgroup G1")->required();
    c->add_option("--g2", opt.g2, "Subgroup G2")->required();
    c->add_option("--omega2", opt.omega2, "3-cocycle on G2 (default: the restriction of omega)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Context ctx(opt, in);
  json rep = json::object();
  int status = 0;
  try {
    status = handler(ctx, opt, rep);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (!e.witness().empty()) {
      err << "witness:";
      for (auto w : e.witness()) err << " " << w;
      err << "\n";
    }
    return is_internal(e.code()) ? 2 : 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }

  // Construct-style commands print bare file formats; the rest get a header.
  const bool bare = chosen == "ring deligne" || chosen == "cocycle cyclic" || chosen.starts_with("construct vec-ring") ||
                    chosen.starts_with("construct rep-ring") || chosen.starts_with("construct coset-module");
  if (!bare) {
    rep["command"] = chosen;
    const json options = {{"tolerance", format_real(opt.tolerance)}, {"max_rank", opt.max_rank},
                          {"max_order", opt.max_order}, {"seed", opt.seed},
                          {"modulus", opt.modulus ? json(*opt.modulus) : json(nullptr)},
                          {"g1", opt.g1}, {"g2", opt.g2}};
    const json canon = {{"command", chosen}, {"positional", opt.pos}, {"options", options}, {"inputs", ctx.inputs}};
    rep["inputs_digest"] = io::fnv1a_hex(canon.dump());
  }
  out << (opt.pretty ? rep.dump(2) : rep.dump()) << "\n";
  return status;
}

}  // namespace fusionfact::cli
