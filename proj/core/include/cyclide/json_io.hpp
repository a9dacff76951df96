#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cyclide/circle_components.hpp"
#include "cyclide/cyclide_core.hpp"
#include "cyclide/dupin_conditions.hpp"
#include "cyclide/errors.hpp"

namespace cyclide {

// {"r":"1","u":["1","0","-3","0","9/2"],"v":["-9/2","0","0","0"]}. Every
// scalar is a string holding an integer or p/q; JSON numbers (integer or
// float) and unknown keys are rejected with ParseError.
std::string vector_to_json(const CircleFamilyVector& v);
CircleFamilyVector vector_from_json(std::string_view text);

// Files hold the compact form followed by a newline. Throws IoError with the
// path on failure.
CircleFamilyVector read_vector_json(const std::filesystem::path& path);
void write_vector_json(const CircleFamilyVector& v, const std::filesystem::path& path);

// Verdict plus every witness residual.
std::string verdict_to_json(const ComponentVerdict& verdict);

std::string report_to_json(const QuarticConditionReport& report);
std::string report_to_json(const CubicConditionReport& report);

// {"error":"<kind>","message":...,"details":{name:"p/q",...}}
std::string error_to_json(const DomainError& error);

}  // namespace cyclide
