#pragma once

#include <string>

#include <json.hpp>

#include "lmi/analysis.hpp"
#include "lmi/classify.hpp"
#include "lmi/region.hpp"

namespace lmi {

// Insertion-ordered so output is stable.
using Json = nlohmann::ordered_json;

// Non-finite values become the strings "inf", "-inf" or "nan".
Json number_json(double v);

Json to_json(const Matrix& m);
Json to_json(const LmiRegion& r);
// Region file text: one matrix row per line.
std::string region_file_text(const LmiRegion& r);
Json to_json(const RealInterval& iv);
Json to_json(const RecessionCone& c);
Json to_json(const RegionReport& rep);
Json to_json(const Disk& d);
Json to_json(const ConeAngleRoutes& routes);
Json to_json(const OmegaResult& om);
Json to_json(const Inertia& in);
Json to_json(const ElementaryPiece& p);
Json to_json(const Decomposition& d);  // list of {kind, params}
Json to_json(const CurveRegion& c);
Json to_json(const CurveCensus& c);

// `field` names the value in diagnostics. Accepts a list of equal-length
// numeric lists.
Matrix matrix_from_json(const Json& j, const std::string& field);

// Region schema {"name"?: string, "L": number[][], "M": number[][]}.
// ParseError carries line and column; ShapeError and NotSymmetricL name the
// offending field.
LmiRegion region_from_json(const Json& j, const ToleranceConfig& cfg = {});
LmiRegion parse_region_text(const std::string& text, const ToleranceConfig& cfg = {},
                            const std::string& source = "<input>");
LmiRegion parse_region_file(const std::string& path, const ToleranceConfig& cfg = {});

Json parse_json_text(const std::string& text, const std::string& source);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lmi
