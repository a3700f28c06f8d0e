#pragma once

#include "smaaffsh/problem.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace smaaffsh {

using Json = nlohmann::ordered_json;

/// Resolves a problem document (schema version 1). Schema violations raise
/// Error(Schema) with the path of the offending field; semantic problems raise
/// the matching domain code (UNKNOWN_TERM, PROFILE_OVERLAP, WEIGHT_SPEC, ...).
Problem parse_problem(const Json& document);
Problem parse_problem_text(std::string_view text);
/// Throws Error(Io) when the file cannot be read.
Problem load_problem(const std::filesystem::path& path);

/// Canonical form: every optional section spelled out, values in elementary
/// order, terms as "scale:term".
Json to_json(const Problem& problem);
std::string write_problem(const Problem& problem);

}  // namespace smaaffsh
