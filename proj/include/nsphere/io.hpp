#pragma once

#include <string>

#include <json.hpp>

#include "nsphere/dual_graph.hpp"
#include "nsphere/free_group.hpp"
#include "nsphere/infinite_link.hpp"
#include "nsphere/link_model.hpp"
#include "nsphere/spine.hpp"

// JSON and DOT encodings of the library types. Readers throw InputError on
// malformed documents and ignore unknown keys, so any report that embeds a
// graph can be fed back through graph_from_json.
namespace nsphere::io {

using nlohmann::json;

json parse_json(const std::string& text);

json to_json(const GraphOfGroups& g);
GraphOfGroups graph_from_json(const json& j);
std::string to_dot(const GraphOfGroups& g, const std::string& name = "G");

json to_json(const SystemClassification& c);
json to_json(const SphereSystemBlueprint& bp);
json to_json(const std::vector<Fault>& faults);

json to_json(const WhiteheadAuto& phi);
json to_json(const Minimization& m);
json to_json(const PrimitivityResult& r);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);
json to_json(const LinkComplex& c);
LinkComplex complex_from_json(const json& j);
json to_json(const LinkComplexReport& r);
std::string to_dot(const LinkComplex& c);

json to_json(const WitnessComponent& w);
WitnessComponent witness_from_json(const json& j);
json to_json(const TubeCertificate& c);
TubeCertificate certificate_from_json(const json& j);
json to_json(const FamilyReport& r);

json to_json(const CollapsePoset& p);
CollapsePoset poset_from_json(const json& j);
std::string to_dot(const CollapsePoset& p);

}  // namespace nsphere::io
