#pragma once

#include "smaaffsh/flows.hpp"
#include "smaaffsh/fuzzy.hpp"
#include "smaaffsh/hierarchy.hpp"
#include "smaaffsh/preference.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace smaaffsh {

struct LinguisticTerm {
  std::string name;    ///< e.g. "Highly Mature"
  std::string abbrev;  ///< e.g. "HM"; may be empty
  Tfn value;
};

/// Ordered linguistic scale; modes are strictly monotone along the order.
struct LinguisticScale {
  std::string name;
  std::vector<LinguisticTerm> terms;

  /// Matches either the full name or the abbreviation.
  const LinguisticTerm* find(std::string_view term) const;
};

/// Throws Error(Scale) when the scale is empty, has duplicate terms, negative
/// spreads or non-monotone modes.
void validate_scale(const LinguisticScale& scale);

struct CrispValue {
  double value = 0.0;
};

/// Fixed fuzzy value: a scale term (scale and term recorded) or a literal triangle.
struct FuzzyValue {
  std::string scale;
  std::string term;
  Tfn value;
};

/// Uniform draw on [lower, upper].
struct IntervalValue {
  double lower = 0.0;
  double upper = 0.0;
};

enum class Family { Normal, Uniform, Triangular, LogNormal };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);
/// Number of parameters: normal (mean, sd), uniform (lower, upper),
/// triangular (lower, mode, upper), lognormal (mu, sigma).
std::size_t parameter_count(Family family);

struct DistributionValue {
  Family family = Family::Normal;
  std::vector<double> params;
  /// Draws outside these bounds are redrawn.
  std::optional<ValueBounds> bounds;
};

using StochasticValue = std::variant<CrispValue, FuzzyValue, IntervalValue, DistributionValue>;

bool is_random(const StochasticValue& value);

/// Throws Error(InvalidArgument) for an interval with lower > upper or invalid
/// distribution parameters.
void validate_value(const StochasticValue& value);

/// Preference model of one elementary criterion; thresholds may be stochastic.
struct PreferenceModel {
  Shape shape = Shape::Usual;
  Direction direction = Direction::Maximize;
  StochasticValue q = CrispValue{0.0};
  StochasticValue p = CrispValue{0.0};
  StochasticValue s = CrispValue{0.0};
};

struct Alternative {
  std::string name;
  std::vector<StochasticValue> values;  // one per elementary criterion
};

struct SmaaSettings {
  std::size_t iterations = 10000;
  std::uint64_t seed = 0;
  Rule rule = Rule::Net;
  DefuzzMethod defuzz = DefuzzMethod::Centroid;
  std::size_t max_attempts = 1000000;
  /// Exploitation threshold annotated next to the final assignment.
  double threshold = 0.5;
};

/// Fully resolved decision problem. Every per-criterion vector follows the tree's
/// elementary ordering.
struct Problem {
  std::string name;
  CriteriaTree tree;
  std::vector<std::string> categories;  // C_1 (best) .. C_k
  std::vector<LinguisticScale> scales;
  std::vector<std::vector<StochasticValue>> profiles;  // [criterion][h], k + 1 each
  std::vector<PreferenceModel> preferences;
  std::vector<Alternative> alternatives;
  SmaaSettings settings;

  std::size_t category_count() const { return categories.size(); }
};

/// True when nothing in the problem is drawn at random.
bool is_zero_variance(const Problem& problem);

}  // namespace smaaffsh
