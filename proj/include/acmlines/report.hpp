#pragma once

#include <acmlines/criteria.hpp>
#include <acmlines/ferrers.hpp>

#include <json.hpp>

#include <string>

namespace acmlines::io {

using json = nlohmann::json;

/// {"acm":..,"routes":{"chordal":..,"hyp":{"4":..},"numeric":{..}},"witness":..}
json verdict_to_json(const AcmVerdict& v);

json degrees_to_json(const DegreeSet& s);

/// Header `i,j,k,deltaH,H`, one row per cell in row-major order.
std::string hilbert_csv(const Grid3& delta, const Grid3& h);
/// {"box":[..],"H":[[[..]]],"deltaH":[[[..]]]}
json hilbert_json(const Grid3& delta, const Grid3& h);

}  // namespace acmlines::io
