#pragma once

#include <string>

// canonical key order, exact fields as integers or [num, den] pairs
#include "json.hpp"

#include "benz/ekr.hpp"
#include "benz/geometry.hpp"
#include "benz/spectral.hpp"

namespace benz {

using Json = nlohmann::ordered_json;

Json geometry_to_json(const CircleGeometry& g);
CircleGeometry geometry_from_json(const Json& j);

void save_json(const Json& j, const std::string& path);
Json load_json(const std::string& path);

Json rat_to_json(const Rat& r); // integer or [num, den]

Json scheme_to_json(const SchemeData& s, bool ok, const std::string& witness);
Json gp_to_json(const GPProfile& p);
Json bounds_to_json(const BoundsReport& rep);
Json search_to_json(const CircleGeometry& g, const SearchResult& res);

} // namespace benz
