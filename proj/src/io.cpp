#include "fusionfact/io.hpp"

#include <cinttypes>
#include <cstdio>

namespace fusionfact::io {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string(what) + ": " + e.what());
  }
}

std::vector<TensorEntry> parse_tensor(const json& arr) {
  std::vector<TensorEntry> out;
  for (const auto& row : arr) {
    if (!row.is_array() || row.size() != 4) throw Error(ErrorCode::MalformedInput, "tensor entries are [i,j,k,N]");
    for (const auto& x : row)
      if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
        throw Error(ErrorCode::MalformedInput, "tensor entries must be nonnegative integers");
    out.push_back({row[0].get<std::size_t>(), row[1].get<std::size_t>(), row[2].get<std::size_t>(),
                   row[3].get<std::uint64_t>()});
  }
  return out;
}

json tensor_json(std::span<const TensorEntry> entries) {
  json t = json::array();
  for (const auto& e : entries) t.push_back({e.i, e.j, e.k, e.mult});
  return t;
}

}  // namespace

RawRing parse_ring(const json& j) {
  return guarded("ring file", [&] {
    RawRing raw;
    raw.labels = j.at("labels").get<std::vector<std::string>>();
    raw.dual = j.at("dual").get<std::vector<std::size_t>>();
    raw.tensor = parse_tensor(j.at("tensor"));
    if (j.contains("unit")) raw.unit = j.at("unit").get<std::size_t>();
    return raw;
  });
}

json ring_to_json(const FusionRing& ring) {
  return {{"labels", ring.labels()}, {"dual", ring.duals()}, {"tensor", tensor_json(ring.entries())}};
}

RawModule parse_module(const json& j) {
  return guarded("module file", [&] {
    RawModule raw;
    raw.labels = j.at("mlabels").get<std::vector<std::string>>();
    raw.action = parse_tensor(j.at("action"));
    return raw;
  });
}

json module_to_json(const FusionModule& module) {
  return {{"ring", ring_to_json(module.base())}, {"mlabels", module.labels()}, {"action", tensor_json(module.entries())}};
}

FiniteGroup parse_group(const json& j) {
  return guarded("group file", [&] {
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("table")) {
      auto table = j.at("table").get<std::vector<std::vector<Element>>>();
      if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
        throw Error(ErrorCode::MalformedInput, "group order differs from table size");
      return FiniteGroup::from_table(table, std::move(labels));
    }
    auto g = FiniteGroup::from_permutations(j.at("points").get<std::size_t>(),
                                            j.at("perm_gens").get<std::vector<Permutation>>());
    if (!labels.empty()) return FiniteGroup::from_table(g.table(), std::move(labels));
    return g;
  });
}

json group_to_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"table", g.table()}, {"labels", g.labels()}};
}

Cochain parse_cochain(const json& j, const std::function<FiniteGroup(std::string_view)>& resolve_group,
                      const std::optional<FiniteGroup>& fallback) {
  return guarded("cochain file", [&]() -> Cochain {
    if (j.contains("formula")) {
      const auto& f = j.at("formula");
      if (f.at("type").get<std::string>() != "cyclic3")
        throw Error(ErrorCode::MalformedInput, "unknown cochain formula type");
      return cyclic_3cocycle(f.at("n").get<std::size_t>(), f.at("q").get<std::size_t>());
    }
    std::optional<FiniteGroup> g;
    if (j.contains("group")) {
      const auto& gj = j.at("group");
      g = gj.is_string() ? resolve_group(gj.get<std::string>()) : parse_group(gj);
    } else if (fallback) {
      g = fallback;
    } else {
      throw Error(ErrorCode::MalformedInput, "cochain file names no group");
    }
    Cochain c(*g, j.at("degree").get<std::size_t>());
    for (const auto& row : j.at("values")) {
      if (!row.is_array() || row.size() != c.degree() + 1)
        throw Error(ErrorCode::MalformedInput, "cochain values are [g1,...,gk,\"p/q\"]");
      std::vector<Element> args;
      for (std::size_t i = 0; i < c.degree(); ++i) args.push_back(row[i].get<Element>());
      const auto& v = row[c.degree()];
      c.set(args, v.is_string() ? CircleValue::parse(v.get<std::string>()) : CircleValue(v.get<std::int64_t>(), 1));
    }
    return c;
  });
}

json cochain_to_json(const Cochain& c) {
  json values = json::array();
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    if (c[flat].is_zero()) continue;
    json row = c.tuple(flat);
    row.push_back(c[flat].to_string());
    values.push_back(std::move(row));
  }
  return {{"group", group_to_json(c.group())}, {"degree", c.degree()}, {"values", std::move(values)}};
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

}  // namespace fusionfact::io
