#pragma once

#include <json.hpp>

#include "hecke/epstein.hpp"
#include "hecke/lefschetz.hpp"
#include "hecke/sl2.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

Json to_json(const Complex& z);
Json to_json(const Weight& w);
Json to_json(const TorusElement& t);
Json to_json(const NoncompactCartanElement& h);
Json to_json(const GeometricData& g);
Json to_json(const LefschetzBreakdown& b);
Json to_json(const RootSystem& rs);
Json to_json(const EpsteinSpec& s);
Json to_json(const LaurentConstant& c);
Json to_json(const sl2::OracleReport& r);

// Parsers throw ValidationError with the offending field in the message.
Complex complex_from_json(const Json& j);
Weight weight_from_json(const Json& j);
TorusElement torus_from_json(const Json& j);
NoncompactCartanElement cartan_from_json(const Json& j);
GeometricData geometry_from_json(const Json& j);
EpsteinSpec epstein_spec_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace hecke
