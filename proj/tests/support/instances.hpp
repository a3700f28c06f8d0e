#pragma once

// Random dominance-respecting FlowSort-H instances for property tests.

#include "smaaffsh/flows.hpp"
#include "smaaffsh/hierarchy.hpp"

#include <memory>
#include <random>
#include <vector>

namespace instances {

struct Options {
  int min_depth = 2;
  int max_depth = 4;
  int min_children = 2;
  int max_children = 6;
  int min_categories = 2;
  int max_categories = 5;
  int alternatives = 3;
  /// Give profiles and evaluations triangular spreads.
  bool fuzzy = false;
};

struct Instance {
  std::unique_ptr<smaaffsh::CriteriaTree> tree;
  smaaffsh::WeightAssignment weights;
  std::vector<smaaffsh::PreferenceSpec> preferences;
  smaaffsh::ProfileSet profiles;
  std::vector<smaaffsh::Evaluation> alternatives;
};

/// Usual and v-shape-with-indifference criteria. Consecutive profile supports
/// are separated by more than the preference threshold, so every profile
/// strictly outranks the next one.
Instance random_instance(std::mt19937_64& rng, const Options& options = {});

smaaffsh::TreeSpec random_tree(std::mt19937_64& rng, const Options& options);

}  // namespace instances
