#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fusionfact/cochain.hpp"
#include "fusionfact/fusion_module.hpp"
#include "fusionfact/fusion_ring.hpp"
#include "fusionfact/group.hpp"

namespace fusionfact::io {

using json = nlohmann::json;

/// {"labels": [...], "dual": [...], "tensor": [[i,j,k,N], ...], "unit"?: u}
RawRing parse_ring(const json& j);
json ring_to_json(const FusionRing& ring);

/// {"ring": <ring object or spec string>, "mlabels": [...], "action": [[i,j,k,A], ...]}
RawModule parse_module(const json& j);
json module_to_json(const FusionModule& module);

/// {"order": n, "table": [[...]]} or {"points": m, "perm_gens": [[...]]}, with optional "labels".
FiniteGroup parse_group(const json& j);
json group_to_json(const FiniteGroup& g);

/// {"group": <group>, "degree": k, "values": [[g1,...,gk,"p/q"], ...]} or
/// {"formula": {"type": "cyclic3", "n": n, "q": q}}. `resolve_group` turns a
/// group name string into a group; `fallback` is used when "group" is absent.
Cochain parse_cochain(const json& j, const std::function<FiniteGroup(std::string_view)>& resolve_group,
                      const std::optional<FiniteGroup>& fallback = std::nullopt);
json cochain_to_json(const Cochain& c);

/// Decimal string with 12 significant digits.
std::string format_real(double x);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace fusionfact::io
