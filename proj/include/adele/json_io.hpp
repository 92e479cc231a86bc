#ifndef ADELE_JSON_IO_HPP
#define ADELE_JSON_IO_HPP

#include <json.hpp>

#include "adele/brauer.hpp"
#include "adele/equivalence.hpp"
#include "adele/fieldlab.hpp"
#include "adele/genus.hpp"
#include "adele/matching.hpp"
#include "adele/orders.hpp"
#include "adele/volume.hpp"

namespace adele {

using json = nlohmann::json;

// Canonical serialization: nlohmann objects keep keys sorted, so dump() is
// already byte-stable; all big integers and reals travel as decimal strings.

json to_json(const Place& place);
Place place_from_json(const json& j);

json to_json(const NumberFieldSpec& field);
NumberFieldSpec field_from_json(const json& j);

json to_json(const BrauerClass& c);
BrauerClass class_from_json(const json& j);

json to_json(const EquivalenceVerdict& v);
EquivalenceVerdict verdict_from_json(const json& j);

json to_json(const PlaceBijectionData& phi);
PlaceBijectionData matching_from_json(const json& j);

json to_json(const OrderData& order);
OrderData order_from_json(const json& j);

json to_json(const LevelIdeal& ideal);

json to_json(const TreeVertex& v);
TreeVertex tree_vertex_from_json(const json& j);

json to_json(const ZetaEstimate& z);
ZetaEstimate zeta_from_json(const json& j, mpfr_prec_t precision_bits);

json to_json(const VolumeInput& in);
VolumeInput volume_input_from_json(const json& j);

json to_json(const VolumeResult& r);
json to_json(const ArchDecomposition& d);
json to_json(const IsoBound& b);
json to_json(const GenusBoundReport& r);
json to_json(const ThetaSearchResult& r);

} // namespace adele

#endif
