#pragma once

#include <string>

#include <json.hpp>

#include "annulus/charts.hpp"
#include "annulus/circle.hpp"
#include "annulus/riemann.hpp"
#include "annulus/semigroup.hpp"
#include "annulus/series.hpp"

namespace annulus {

using Json = nlohmann::json;

Json to_json(const CircleHomeo& h);
Json to_json(const DiskMap& f);
Json to_json(const ExteriorMap& g);
Json to_json(const JordanCurveSamples& c);
Json to_json(const RiggedAnnulus& x);
Json to_json(const ChartPoint& p);
Json to_json(const TaylorSeries& s);

CircleHomeo circle_homeo_from_json(const Json& j);
DiskMap disk_map_from_json(const Json& j);
ExteriorMap exterior_map_from_json(const Json& j);
JordanCurveSamples curve_from_json(const Json& j);
RiggedAnnulus annulus_from_json(const Json& j, const RunConfig& cfg = {});
ChartPoint chart_point_from_json(const Json& j);
TaylorSeries series_from_json(const Json& j);

// Throws InvalidInput with the offending path on parse failures.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

std::string json_kind(const Json& j);

}  // namespace annulus
