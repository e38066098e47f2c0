#pragma once

#include <string>
#include <vector>

#include "benz/geometry.hpp"

namespace benz {

// exit codes: 0 success, 1 usage, 2 verification mismatch, 3 budget exceeded
int cli_main(const std::vector<std::string>& args);

// construct one of the known geometries by CLI type name
CircleGeometry build_geometry(const std::string& type, int64_t q, int phi);

} // namespace benz
