#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "lderiv/classify.hpp"
#include "lderiv/lseries.hpp"
#include "lderiv/periodic.hpp"
#include "lderiv/relations.hpp"

namespace lderiv {

// Insertion-ordered so that dumps are byte-stable.
using Json = nlohmann::ordered_json;

// {"q": 9, "values": {"1": "2/3", "8": "2/3"}}; residues ascending,
// denominators omitted when 1, zeros not written.
Json to_json(const PeriodicFunction& f);
// Strict inverse of to_json. ValidationError names the offending key.
PeriodicFunction periodic_from_json(const Json& j);
PeriodicFunction parse_periodic(std::string_view text);

// {"value": "<decimal>", "digits": d}; `significant` defaults to the
// value's own precision.
Json to_json(const Real& x, int significant = 0);

Json to_json(const Classification& c);
Json to_json(const VanishingVerdict& v);
Json to_json(const LValue& v);
Json to_json(const FamilyRank& r);
Json to_json(const LogSineBasis& b);
Json to_json(const Relation& r);
Json to_json(const Witness& w);

// Two-space indented dump followed by a newline; the canonical file form.
std::string dump(const Json& j);

}  // namespace lderiv
