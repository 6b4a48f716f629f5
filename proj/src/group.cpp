#include "fusionfact/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace fusionfact {

namespace {

std::string cycle_notation(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == s) continue;
    any = true;
    os << "(";
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      os << (x == s ? "" : " ") << x;
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = g[h[x]];
  return r;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table, std::vector<std::string> labels,
                                    std::size_t max_order) {
  const auto n = table.size();
  if (n == 0) throw Error(ErrorCode::NotClosed, "empty multiplication table");
  if (n > max_order) throw Error(ErrorCode::TooLarge, "group order " + std::to_string(n) + " exceeds bound", {n});
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorCode::NotClosed, "multiplication table is not square", {a});
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n) throw Error(ErrorCode::NotClosed, "product outside the group", {a, b});
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[table[a][b]]) throw Error(ErrorCode::NotClosed, "row is not a permutation", {a, b});
      if (col[table[b][a]]) throw Error(ErrorCode::NotClosed, "column is not a permutation", {b, a});
      row[table[a][b]] = col[table[b][a]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw Error(ErrorCode::NotClosed, "element 0 must be the identity", {0, a});

  auto data = std::make_shared<Data>();
  data->order = n;
  data->table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) data->table[a * n + b] = table[a][b];
  data->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == 0) data->inverse[a] = static_cast<Element>(b);

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (table[table[a][b]][c] != table[a][table[b][c]])
      throw Error(ErrorCode::NotClosed, "multiplication is not associative", {a, b, c});
  };
  if (n <= 512) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }

  if (labels.empty()) {
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  } else if (labels.size() != n) {
    throw Error(ErrorCode::MalformedInput, "label count differs from group order");
  }
  data->labels = std::move(labels);
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::from_permutations(std::size_t points, const std::vector<Permutation>& generators,
                                           std::size_t max_order) {
  if (points == 0 || points > 16) throw Error(ErrorCode::TooLarge, "permutation degree must be in 1..16", {points});
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& p = generators[g];
    std::vector<bool> hit(points, false);
    if (p.size() != points) throw Error(ErrorCode::MalformedInput, "generator has wrong degree", {g});
    for (auto x : p) {
      if (x >= points || hit[x]) throw Error(ErrorCode::MalformedInput, "generator is not a permutation", {g});
      hit[x] = true;
    }
  }
  Permutation id(points);
  for (std::size_t x = 0; x < points; ++x) id[x] = static_cast<std::uint32_t>(x);

  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : generators) {
      auto p = compose(elems[head], s);
      if (index.emplace(p, static_cast<Element>(elems.size())).second) {
        elems.push_back(std::move(p));
        if (elems.size() > max_order)
          throw Error(ErrorCode::TooLarge, "generated group exceeds order bound", {max_order});
      }
    }
  }
  const auto n = elems.size();
  auto data = std::make_shared<Data>();
  data->order = n;
  data->table.resize(n * n);
  data->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto c = index.at(compose(elems[a], elems[b]));
      data->table[a * n + b] = c;
      if (c == 0) data->inverse[a] = static_cast<Element>(b);
    }
  for (const auto& p : elems) data->labels.push_back(cycle_notation(p));
  data->perms = std::move(elems);
  return FiniteGroup(std::move(data));
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  const auto n = order();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = mul(static_cast<Element>(a), static_cast<Element>(b));
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t FiniteGroup::element_order(Element g) const {
  std::size_t k = 1;
  for (Element x = g; x != identity(); x = mul(x, g)) ++k;
  return k;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::MalformedInput, "cyclic group of order 0");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_table(t);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::MalformedInput, "dihedral group D0");
  if (n == 1) return cyclic_group(2);
  if (n == 2) return direct_product(cyclic_group(2), cyclic_group(2));
  Permutation rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    ref[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return FiniteGroup::from_permutations(n, {rot, ref});
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw Error(ErrorCode::TooLarge, "symmetric groups are built in for n = 1..5", {n});
  if (n == 1) return cyclic_group(1);
  Permutation swap(n), cycle(n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = static_cast<std::uint32_t>(i);
    cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  }
  std::swap(swap[0], swap[1]);
  return FiniteGroup::from_permutations(n, {swap, cycle});
}

FiniteGroup quaternion_group() {
  // Element 2*u + s encodes (-1)^s * u with u in {1, i, j, k}.
  // Unit products u*v = sign * w for the quaternion units.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      t[a][b] = static_cast<Element>(2 * kUnit[ua][ub] + ((sa + sb + kSign[ua][ub]) % 2));
    }
  return FiniteGroup::from_table(t, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const auto ng = g.order(), nh = h.order();
  std::vector<std::vector<Element>> t(ng * nh, std::vector<Element>(ng * nh));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < ng * nh; ++a) {
    labels.push_back("(" + g.label(static_cast<Element>(a / nh)) + "," + h.label(static_cast<Element>(a % nh)) + ")");
    for (std::size_t b = 0; b < ng * nh; ++b) {
      auto x = g.mul(static_cast<Element>(a / nh), static_cast<Element>(b / nh));
      auto y = h.mul(static_cast<Element>(a % nh), static_cast<Element>(b % nh));
      t[a][b] = static_cast<Element>(x * nh + y);
    }
  }
  return FiniteGroup::from_table(t, std::move(labels));
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<Element>>& action) {
  const auto nn = n.order(), nh = h.order();
  if (action.size() != nh) throw Error(ErrorCode::MalformedInput, "action table needs one row per element of H");
  for (std::size_t x = 0; x < nh; ++x) {
    const auto& phi = action[x];
    if (phi.size() != nn) throw Error(ErrorCode::MalformedInput, "action row has wrong length", {x});
    for (Element a = 0; a < nn; ++a) {
      if (phi[a] >= nn) throw Error(ErrorCode::MalformedInput, "action image out of range", {x, a});
      for (Element b = 0; b < nn; ++b)
        if (phi[n.mul(a, b)] != n.mul(phi[a], phi[b]))
          throw Error(ErrorCode::NotClosed, "action is not by homomorphisms", {x, a, b});
    }
  }
  for (Element x = 0; x < nh; ++x)
    for (Element y = 0; y < nh; ++y)
      for (Element a = 0; a < nn; ++a)
        if (action[h.mul(x, y)][a] != action[x][action[y][a]])
          throw Error(ErrorCode::NotClosed, "action is not a homomorphism H -> Aut(N)", {x, y, a});
  std::vector<std::vector<Element>> t(nn * nh, std::vector<Element>(nn * nh));
  for (std::size_t p = 0; p < nn * nh; ++p)
    for (std::size_t q = 0; q < nn * nh; ++q) {
      auto n1 = static_cast<Element>(p / nh), h1 = static_cast<Element>(p % nh);
      auto n2 = static_cast<Element>(q / nh), h2 = static_cast<Element>(q % nh);
      t[p][q] = static_cast<Element>(n.mul(n1, action[h1][n2]) * nh + h.mul(h1, h2));
    }
  return FiniteGroup::from_table(t);
}

FiniteGroup builtin_group(std::string_view name) {
  if (auto x = name.find('x'); x != std::string_view::npos)
    return direct_product(builtin_group(name.substr(0, x)), builtin_group(name.substr(x + 1)));
  if (name == "Q8") return quaternion_group();
  if (name.size() >= 2) {
    const auto digits = name.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) && digits.size() <= 4) {
      const auto k = static_cast<std::size_t>(std::stoul(std::string(digits)));
      switch (name[0]) {
        case 'C': return cyclic_group(k);
        case 'D': return dihedral_group(k);
        case 'S': return symmetric_group(k);
        default: break;
      }
    }
  }
  throw Error(ErrorCode::MalformedInput, "unknown builtin group '" + std::string(name) + "'");
}

bool Subgroup::contains(Element g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

std::size_t Subgroup::local_index(Element g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) throw Error(ErrorCode::IndexOutOfRange, "element not in subgroup", {g});
  return static_cast<std::size_t>(it - elements_.begin());
}

Subgroup Subgroup::from_elements(const FiniteGroup& g, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (auto e : elements)
    if (e >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "element outside the group", {e});
  Subgroup s(std::move(elements));
  if (s.elements_.empty() || s.elements_.front() != FiniteGroup::identity())
    throw Error(ErrorCode::NotClosed, "subgroup must contain the identity");
  for (auto a : s.elements_) {
    if (!s.contains(g.inv(a))) throw Error(ErrorCode::NotClosed, "not closed under inverses", {a});
    for (auto b : s.elements_)
      if (!s.contains(g.mul(a, b))) throw Error(ErrorCode::NotClosed, "not closed under products", {a, b});
  }
  if (g.order() % s.size() != 0) invariant_failure("subgroup order does not divide group order", {s.size()});
  return s;
}

FiniteGroup Subgroup::as_group(const FiniteGroup& parent) const {
  const auto n = elements_.size();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(parent.label(elements_[a]));
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = static_cast<Element>(local_index(parent.mul(elements_[a], elements_[b])));
  }
  return FiniteGroup::from_table(t, std::move(labels));
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> elems{FiniteGroup::identity()};
  in[0] = true;
  for (auto s : generators)
    if (s >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "generator outside the group", {s});
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (auto s : generators) {
      auto p = g.mul(elems[head], s);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return Subgroup(std::move(elems));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup::from_elements(g, {FiniteGroup::identity()}); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  for (std::size_t a = 0; a < all.size(); ++a) all[a] = static_cast<Element>(a);
  return Subgroup::from_elements(g, std::move(all));
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element x) {
  std::vector<Element> e;
  for (auto a : h.elements()) e.push_back(g.conj(x, a));
  return Subgroup::from_elements(g, std::move(e));
}

Subgroup intersect_subgroups(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> e;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(e));
  return Subgroup::from_elements(g, std::move(e));
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw Error(ErrorCode::OrderBoundExceeded, "group order exceeds subgroup enumeration bound", {g.order(), max_order});
  std::set<std::vector<Element>> found;
  std::vector<Subgroup> lattice;
  for (Element x = 0; x < g.order(); ++x) {
    const Element gen[] = {x};
    auto s = generated_subgroup(g, gen);
    if (found.insert(s.elements()).second) lattice.push_back(std::move(s));
  }
  std::size_t done = 0;  // pairs (p, q) with q < done were already joined
  while (done < lattice.size()) {
    const auto count = lattice.size();
    for (std::size_t q = done; q < count; ++q)
      for (std::size_t p = 0; p < q; ++p) {
        const auto& a = lattice[p].elements();
        const auto& b = lattice[q].elements();
        if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
            std::includes(b.begin(), b.end(), a.begin(), a.end()))
          continue;
        std::vector<Element> u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        auto s = generated_subgroup(g, u);
        if (found.insert(s.elements()).second) lattice.push_back(std::move(s));
      }
    done = count;
  }
  std::sort(lattice.begin(), lattice.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return lattice;
}

GroupFactorization check_group_factorization(const FiniteGroup& g, const Subgroup& g1, const Subgroup& g2) {
  GroupFactorization f{g1, g2};
  const auto meet = intersect_subgroups(g, g1, g2);
  const bool by_order = meet.size() == 1 && g1.size() * g2.size() == g.order();

  std::vector<std::optional<std::pair<Element, Element>>> expr(g.order());
  bool unique = true;
  for (auto a : g1.elements()) {
    for (auto b : g2.elements()) {
      auto p = g.mul(a, b);
      if (expr[p]) {
        unique = false;
        break;
      }
      expr[p] = std::make_pair(a, b);
    }
    if (!unique) break;
  }
  if (unique)
    unique = std::all_of(expr.begin(), expr.end(), [](const auto& e) { return e.has_value(); });

  if (by_order != unique) invariant_failure("order count and unique expression disagree on exactness");
  f.exact = unique;
  if (unique) {
    std::vector<std::pair<Element, Element>> table;
    for (const auto& e : expr) table.push_back(*e);
    f.expression_table = std::move(table);
  }
  return f;
}

std::vector<GroupFactorization> exact_factorizations(const FiniteGroup& g, std::size_t max_order) {
  const auto subs = enumerate_subgroups(g, max_order);
  std::vector<GroupFactorization> out;
  for (const auto& a : subs)
    for (const auto& b : subs) {
      auto f = check_group_factorization(g, a, b);
      if (f.exact) out.push_back(std::move(f));
    }
  std::set<std::pair<std::vector<Element>, std::vector<Element>>> pairs;
  for (const auto& f : out) pairs.insert({f.g1.elements(), f.g2.elements()});
  for (const auto& [a, b] : pairs)
    if (!pairs.count({b, a})) invariant_failure("exact factorization G1 G2 without G2 G1");
  return out;
}

namespace {

std::pair<std::vector<Element>, std::vector<Element>> conjugacy_canonical(const FiniteGroup& g, const Subgroup& a,
                                                                          const Subgroup& b) {
  std::pair<std::vector<Element>, std::vector<Element>> best{a.elements(), b.elements()};
  for (Element x = 0; x < g.order(); ++x) {
    std::pair<std::vector<Element>, std::vector<Element>> c{conjugate_subgroup(g, a, x).elements(),
                                                            conjugate_subgroup(g, b, x).elements()};
    if (c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

std::vector<GroupFactorization> dedup_by_conjugacy(const FiniteGroup& g, const std::vector<GroupFactorization>& list) {
  std::set<std::pair<std::vector<Element>, std::vector<Element>>> seen;
  std::vector<GroupFactorization> out;
  for (const auto& f : list)
    if (seen.insert(conjugacy_canonical(g, f.g1, f.g2)).second) out.push_back(f);
  return out;
}

FactorizationCounts count_factorizations(const FiniteGroup& g, const std::vector<GroupFactorization>& list) {
  FactorizationCounts c;
  c.ordered = list.size();
  std::set<std::set<std::vector<Element>>> unordered;
  for (const auto& f : list) unordered.insert({f.g1.elements(), f.g2.elements()});
  c.unordered = unordered.size();
  c.up_to_conjugacy = dedup_by_conjugacy(g, list).size();
  return c;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const auto n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<Element> cls;
    for (Element y = 0; y < n; ++y) cls.insert(g.conj(y, x));
    for (auto c : cls) seen[c] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  ConjugacyClasses out{std::move(classes), std::vector<std::size_t>(n)};
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    for (auto x : out.classes[c]) out.class_of[x] = c;
  return out;
}

std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& l1, const Subgroup& l2) {
  std::vector<bool> seen(g.order(), false);
  std::vector<DoubleCoset> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<Element> s;
    for (auto a : l1.elements())
      for (auto b : l2.elements()) s.insert(g.mul(g.mul(a, x), b));
    for (auto y : s) seen[y] = true;
    out.push_back({x, {s.begin(), s.end()}});
  }
  return out;
}

std::vector<std::vector<Element>> left_cosets(const FiniteGroup& g, const Subgroup& l) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<Element>> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> c;
    for (auto a : l.elements()) c.push_back(g.mul(x, a));
    std::sort(c.begin(), c.end());
    for (auto y : c) seen[y] = true;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace fusionfact
