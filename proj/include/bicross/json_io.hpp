#pragma once

#include "bicross/cochain.hpp"
#include "bicross/constructions.hpp"
#include "bicross/cyclo.hpp"
#include "bicross/group.hpp"
#include "bicross/hopf.hpp"
#include "bicross/opext.hpp"
#include "bicross/repcat.hpp"
#include "bicross/report.hpp"

#include <json.hpp>

namespace bicross {

using Json = nlohmann::ordered_json;

Json to_json(const RootExp& r);
RootExp rootexp_from_json(const Json& j);

Json to_json(const CycloNum& c);
CycloNum cyclo_from_json(const Json& j);

Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json to_json(const ExactFactorization& f);
ExactFactorization factorization_from_json(const Json& j);

Json to_json(const MatchedPair& mp);
MatchedPair matched_pair_from_json(const Json& j);

Json to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j);

Json to_json(const PairCocycle& pc);
PairCocycle pair_cocycle_from_json(const Json& j);

/// {"dim", "N", "mult": [[i,j,k,coeff]...], "comult": [[i,j,k,coeff]...],
///  "unit": [...], "counit": [...], "antipode": matrix or null}
Json to_json(const StructureHopf& h);
StructureHopf hopf_from_json(const Json& j);

Json to_json(const QuasiBialgebra& q);
QuasiBialgebra quasi_from_json(const Json& j);

Json to_json(const Report& r);

/// FNV-1a 64-bit hash, hex encoded; used for workspace manifests.
std::string fnv1a_hex(const std::string& bytes);

} // namespace bicross
