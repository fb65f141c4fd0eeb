#pragma once

#include <acmlines/variety.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace acmlines::io {

using json = nlohmann::json;

/// Parses `{"d":[d1,d2,d3],"U3":[[i,j],...],"U2":[[i,k],...],"U1":[[j,k],...]}`.
/// Missing U-arrays are empty. Structural problems throw ParseError; the
/// returned value is unchecked (pass it to validate()).
RawVariety parse_variety(const json& j);
RawVariety parse_variety_text(const std::string& text);

json to_json(const VarietyOfLines& x);

/// Parses `{"points":[[i,j,k],...]}`.
std::vector<PointTriple> parse_points(const json& j);
std::vector<PointTriple> parse_points_text(const std::string& text);
json points_to_json(const std::vector<PointTriple>& pts);

std::string read_file(const std::string& path);

}  // namespace acmlines::io
