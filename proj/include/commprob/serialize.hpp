#pragma once

#include <string>

#include "json.hpp"

#include "commprob/catalog.hpp"
#include "commprob/witnesses.hpp"

namespace commprob {

using Json = nlohmann::json;

// Certificate JSON. Schema conventions: the group travels as a descriptor
// (source spec string plus a content digest), element sets and subgroups
// as sorted index arrays, rationals as {"num","den"} strings, stage traces
// as ordered records with branch tags. Quotients are stored by kernel and
// recomputed on load, which is deterministic.

Json ratio_to_json(const Ratio& r);
Ratio ratio_from_json(const Json& j);

Json group_descriptor(const FiniteGroup& g, const std::string& spec_text);
// Rebuilds the group from the descriptor and cross-checks the digest.
GroupPtr group_from_descriptor(const Json& j);

Json to_json(const Prop11Certificate& cert, const std::string& spec_text);
Json to_json(const Prop13Certificate& cert, const std::string& spec_text);
Json to_json(const Thm12Certificate& cert, const std::string& spec_text);

// Loaders take the ambient group; wrappers resolve it from the descriptor.
Prop11Certificate prop11_from_json(const Json& j, GroupPtr g);
Prop13Certificate prop13_from_json(const Json& j, GroupPtr g);
Thm12Certificate thm12_from_json(const Json& j, GroupPtr g);

// Dispatches on the stored "type" tag and validates. The group is rebuilt
// from the descriptor unless one is supplied.
ValidationReport validate_json_certificate(const Json& j, GroupPtr g = nullptr);

// Human-readable stage-and-bounds summaries.
std::string describe(const Prop11Certificate& cert);
std::string describe(const Prop13Certificate& cert);
std::string describe(const Thm12Certificate& cert);

}  // namespace commprob
