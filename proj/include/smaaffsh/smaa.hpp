#pragma once

#include "smaaffsh/flows.hpp"
#include "smaaffsh/hierarchy.hpp"
#include "smaaffsh/problem.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace smaaffsh {

using Rng = std::mt19937_64;

/// Independent generator for one iteration, derived from the root seed and the
/// iteration index only. Results never depend on scheduling order.
Rng iteration_rng(std::uint64_t seed, std::uint64_t iteration);

// ---- weight samplers -------------------------------------------------------

/// Uniform point of the simplex from n - 1 uniforms: sort, pad with 0 and 1,
/// take consecutive differences.
std::vector<double> simplex_from_uniforms(std::vector<double> uniforms);

std::vector<double> sample_weights_missing(std::size_t n, Rng& rng);

/// Places a simplex point onto ranked siblings: the ranked components are sorted
/// in descending order and handed out by rank, tied ranks sharing the mean of
/// their positions. Unranked siblings keep their own component.
std::vector<double> ordinal_from_simplex(std::span<const std::optional<int>> ranks, std::vector<double> point);

std::vector<double> sample_weights_ordinal(std::span<const std::optional<int>> ranks, Rng& rng);

/// Rejection sampling from the uniform simplex. Throws Error(Infeasible) after
/// `max_attempts` rejected draws.
std::vector<double> sample_weights_interval(std::span<const WeightBounds> bounds, Rng& rng,
                                            std::size_t max_attempts);

std::vector<double> sample_weights(const WeightSpec& spec, std::size_t n, Rng& rng, std::size_t max_attempts);

/// Draws every sibling group in node order.
WeightAssignment sample_weight_assignment(const CriteriaTree& tree, Rng& rng, std::size_t max_attempts);

// ---- value samplers ---------------------------------------------------------

/// Crisp and fuzzy values pass through; intervals and distributions yield one
/// crisp draw, redrawn until it falls inside `bounds` (and the value's own
/// bounds). Throws Error(Infeasible) after `max_attempts` rejected draws.
Tfn sample_value(const StochasticValue& value, Rng& rng, std::optional<ValueBounds> bounds = std::nullopt,
                 std::size_t max_attempts = 1000000);

/// Concrete thresholds with 0 <= q <= p, by joint rejection.
PreferenceSpec sample_preference(const PreferenceModel& model, Rng& rng, std::size_t max_attempts);

/// One limiting-profile set per criterion with strict dominance r_h > r_{h+1},
/// by rejection of the whole criterion column.
ProfileSet sample_profiles(std::span<const std::vector<StochasticValue>> profiles,
                           std::span<const PreferenceSpec> preferences, Rng& rng, std::size_t max_attempts);

// ---- central values (deterministic mode) -----------------------------------

Tfn central_value(const StochasticValue& value);
/// Expected value of the sampler for `spec`. Interval weights use the bound
/// midpoints renormalized; Error(Infeasible) if that point leaves the box.
std::vector<double> central_weights(const WeightSpec& spec, std::size_t n);

// ---- simulation ---------------------------------------------------------------

/// Every stochastic quantity of one iteration, drawn in a fixed order.
struct Scenario {
  WeightAssignment weights;
  std::vector<PreferenceSpec> preferences;
  ProfileSet profiles;
  std::vector<Evaluation> evaluations;
};

Scenario sample_scenario(const Problem& problem, Rng& rng, std::size_t max_attempts);
Scenario central_scenario(const Problem& problem);

struct SmaaOptions {
  std::size_t iterations = 10000;
  std::uint64_t seed = 0;
  Rule rule = Rule::Net;
  DefuzzMethod defuzz = DefuzzMethod::Centroid;
  std::size_t max_attempts = 1000000;
  /// 0 selects the hardware concurrency.
  unsigned threads = 0;
  /// Raise boundary violations instead of clamping and counting them.
  bool strict = false;

  static SmaaOptions from(const SmaaSettings& settings);
};

/// alternatives x categories
using AcceptabilityMatrix = std::vector<std::vector<double>>;

struct AcceptabilityResult {
  AcceptabilityMatrix category;
  /// Single-criterion index per tree node (indexed like CriteriaTree::nodes());
  /// entry 0 repeats the net-rule overall index.
  std::vector<AcceptabilityMatrix> by_node;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  Rule rule = Rule::Net;
  bool deterministic = false;
  /// Assignments that fell outside the profile range and were clamped.
  std::size_t boundary_violations = 0;
};

AcceptabilityResult run_smaa(const Problem& problem, const SmaaOptions& options);

/// Single engine run on the central scenario, reported as unit-vector indices.
AcceptabilityResult run_deterministic(const Problem& problem, const SmaaOptions& options);

}  // namespace smaaffsh
