#pragma once

#include "simpsep/admissible.hpp"
#include "simpsep/delta.hpp"
#include "simpsep/gamma.hpp"
#include "simpsep/geometry.hpp"
#include "simpsep/separation.hpp"
#include "simpsep/sset.hpp"

#include <json.hpp>

namespace simpsep {

// Field order is preserved so emitted documents are diffable.
using Json = nlohmann::ordered_json;

Json to_json(const DeltaMor& f);        // {"dom":k,"cod":k',"images":[..]}
DeltaMor delta_from_json(const Json& j);

Json to_json(const GammaMor& f);        // {"dom":k,"cod":k',"blocks":[[..],..]}
GammaMor gamma_from_json(const Json& j);

Json to_json(const BaryPoint& t);       // ["p/q", ...]
BaryPoint bary_from_json(const Json& j);

Json to_json(const IntervalFamily& f);  // {"n":n,"bounds":{"i,j":["a","b"],...}}
IntervalFamily intervals_from_json(const Json& j);

// {"dim":D,"cells":{"0":[...],...},"faces":{"e":[{"epi":{...},"cell":"v1"},...]}}
// with faces listed in order d_0..d_p. The loader re-runs the identity
// validator and rejects (rather than repairs) violations.
Json to_json(const FiniteSSet& S);
FiniteSSet sset_from_json(const Json& j);

// {"x":"cell@..","n":..,"N":..,"table":{"0,0,1":["id",...],...}}
Json family_to_json(const AdmissibleFamily& F);
AdmissibleFamily family_from_json(const FiniteSSet& S, const Json& j);

// Self-contained: embeds the simplicial set under "sset".
Json to_json(const SeparationCertificate& cert);
SeparationCertificate certificate_from_json(const FiniteSSet& S, const Json& j);

}  // namespace simpsep
