#pragma once

#include <acmlines/io.hpp>
#include <acmlines/variety.hpp>

#include <string>

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(ACMLINES_TEST_DATA) + "/" + name; }

inline acmlines::RawVariety raw(const std::string& name) {
    return acmlines::io::parse_variety_text(acmlines::io::read_file(path(name)));
}

/// Lenient parse followed by compaction.
inline acmlines::VarietyOfLines load(const std::string& name) {
    return acmlines::compact(acmlines::make_variety(raw(name), acmlines::ValidationMode::Lenient));
}

inline acmlines::VarietyOfLines load_points(const std::string& name) {
    return acmlines::grid_from_points(acmlines::io::parse_points_text(acmlines::io::read_file(path(name))));
}

}  // namespace fixtures
