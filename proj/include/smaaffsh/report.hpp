#pragma once

#include "smaaffsh/problem.hpp"
#include "smaaffsh/smaa.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smaaffsh {

enum class ReportLevel { Category, FirstLevel, AllNodes };
enum class ReportFormat { Text, Delimited };

std::string_view to_string(ReportLevel level);
std::optional<ReportLevel> parse_report_level(std::string_view name);

/// Whole percentages by largest-remainder rounding; the entries of a row that
/// sums to 1 add up to exactly 100.
std::vector<int> display_percentages(std::span<const double> row);

/// Index of the largest acceptability; ties go to the better category.
std::size_t final_assignment(std::span<const double> row);

/// Text tables: the category level lists alternatives against categories; the
/// first-level report lists first-level criteria against alternatives; the
/// all-nodes report prints one block per alternative and first-level criterion
/// with a row per descendant. Final assignments whose acceptability stays below
/// `threshold` are starred.
///
/// Delimited output has one row per (alternative, node) at full precision.
std::string write_report(const AcceptabilityResult& result, const Problem& problem, ReportLevel level,
                         ReportFormat format, double threshold);

/// One line per alternative, e.g. "x1: 100% C1".
std::string summary(const AcceptabilityResult& result, const Problem& problem, double threshold);

}  // namespace smaaffsh
