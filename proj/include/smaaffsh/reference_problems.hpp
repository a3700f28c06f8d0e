#pragma once

#include "smaaffsh/problem.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace smaaffsh {

/// Two-level numerical example: criteria 1 (weight 0.3) and 2 (0.7), each with
/// two elementary sub-criteria, two alternatives, two categories.
Problem appendix_a_problem();

std::vector<std::string> example_names();

/// Step-by-step printout of every intermediate quantity of a bundled example.
/// Throws Error(UnknownExample) for an unknown name.
std::string example_walkthrough(std::string_view name);

}  // namespace smaaffsh
