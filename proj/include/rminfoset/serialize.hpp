// JSON serialisation of the library types. All arrays are sorted and
// integer-valued, so emitted documents are bit-exact across runs.

#ifndef RMINFOSET_SERIALIZE_HPP
#define RMINFOSET_SERIALIZE_HPP

#include <json.hpp>

#include "rminfoset/abelian.hpp"
#include "rminfoset/cyclic.hpp"
#include "rminfoset/reed_muller.hpp"

namespace rminfoset {

using json = nlohmann::ordered_json;

// {"r1":.., "r2":.., "orbits":[[[a1,a2],...],...]}
json to_json(const DefiningSet2D& ds);
DefiningSet2D defining_set_2d_from_json(const json& j);

// {"r1":.., "r2":.., "f":[..], "g":[..], "points":[[i1,i2],...]}
json to_json(const GammaRegion& region);
GammaRegion gamma_region_from_json(const json& j);

// {"n":.., "r1":.., "r2":.., "iso":[d1,d2], "f":[..], "g":[..],
//  "check_positions":[..]}
json to_json(const CyclicGamma& cg, const GroupIso& iso);

// {"m":.., "rho":.., "r1":.., "r2":.., "a":.., "b":.., "iso":[d1,d2],
//  "info_set":["ext",0,...], "check_set":["ext",0,...]}
json to_json(const RMInfoSet& result);

json positions_to_json(const std::vector<Position>& positions);

}  // namespace rminfoset

#endif
