#pragma once

#include "smaaffsh/fuzzy.hpp"
#include "smaaffsh/hierarchy.hpp"
#include "smaaffsh/preference.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <optional>
#include <vector>

namespace smaaffsh {

/// One value per elementary criterion, in the tree's canonical order.
using Evaluation = std::vector<Tfn>;

/// Limiting profiles r_1 (best) .. r_{k+1} (worst) for every elementary criterion.
struct ProfileSet {
  std::vector<std::vector<Tfn>> by_criterion;

  std::size_t profile_count() const { return by_criterion.empty() ? 0 : by_criterion.front().size(); }
  std::size_t category_count() const { return profile_count() == 0 ? 0 : profile_count() - 1; }
  /// Profile `h` (0-based) as an evaluation vector over all elementary criteria.
  Evaluation profile(std::size_t h) const;
};

/// Strict dominance of `better` over `worse`: their supports do not overlap and
/// `better` lies on the preferred side for the given direction.
bool dominates(const Tfn& better, const Tfn& worse, Direction direction);

/// Range an evaluation on a criterion may occupy: [worst profile, best profile]
/// in value terms, using the outer edges of the fuzzy supports.
struct ValueBounds {
  double lower;
  double upper;
  bool contains(const Tfn& value) const { return value.lower() >= lower && value.upper() <= upper; }
};
ValueBounds evaluation_bounds(const std::vector<Tfn>& profiles, Direction direction);

/// Throws Error(ProfileCount | ProfileOverlap | ProfileDominance).
void validate_profiles(const CriteriaTree& tree, std::span<const PreferenceSpec> preferences,
                       const ProfileSet& profiles);
/// Throws Error(Dimension | EvaluationBounds).
void validate_evaluation(const CriteriaTree& tree, std::span<const PreferenceSpec> preferences,
                         const ProfileSet& profiles, const Evaluation& evaluation);

struct Flows {
  double positive = 0.0;
  double negative = 0.0;
  double net = 0.0;
};

/// Flows of an alternative and of its reference set R_i at one tree node. At the
/// root these are the overall flows; elsewhere they are single-criterion flows.
struct NodeFlows {
  Flows alternative;
  std::vector<Flows> profiles;  // r_1 .. r_{k+1}
};

struct FlowBundle {
  std::vector<NodeFlows> nodes;  // indexed like CriteriaTree::nodes(); [0] is the overall level

  const NodeFlows& overall() const { return nodes.front(); }
};

enum class Rule { Positive, Negative, Net };

std::string_view to_string(Rule rule);
std::optional<Rule> parse_rule(std::string_view name);

enum class BoundaryPolicy {
  Throw,  ///< flows outside the profile range raise Error(Boundary)
  Clamp,  ///< assign to the nearest extreme category instead
};

/// 0-based category (0 = C_1, best) under one of the three assignment rules.
/// Ties at a profile flow bind to the better category. Throws Error(ProfileOrder)
/// when the profile flows are not monotone.
std::size_t assign(const NodeFlows& flows, Rule rule, BoundaryPolicy policy = BoundaryPolicy::Throw,
                   bool* clamped = nullptr);

struct Assignment {
  std::size_t by_positive = 0;
  std::size_t by_negative = 0;
  std::size_t by_net = 0;
  std::vector<std::size_t> by_node;  // net rule on single-criterion flows; [0] equals by_net
};

Assignment assign_all(const FlowBundle& bundle, BoundaryPolicy policy = BoundaryPolicy::Throw);

/// FlowSort-H engine for one concrete set of weights, preference functions and
/// profiles. Fuzzy preferences are aggregated up the tree and defuzzified at
/// every node, so node `r` yields the subtree preference P_r.
///
/// Keeps a reference to the tree, which must outlive the engine; weights,
/// preferences and profiles are copied.
class FlowSortH {
 public:
  /// Validates dimensions and profile dominance.
  FlowSortH(const CriteriaTree& tree, const WeightAssignment& weights, std::span<const PreferenceSpec> preferences,
            const ProfileSet& profiles, DefuzzMethod defuzz = DefuzzMethod::Centroid);

  std::size_t category_count() const { return categories_; }
  const CriteriaTree& tree() const { return tree_; }

  /// Defuzzified P_r(a, b) for every node r; entry 0 is the outranking degree pi(a, b).
  std::vector<double> node_preferences(const Evaluation& a, const Evaluation& b) const;
  double outranking(const Evaluation& a, const Evaluation& b) const;

  /// Alternative and profile flows at every node for alternative `x`.
  FlowBundle flows(const Evaluation& x) const;

 private:
  void node_preferences_into(const Evaluation& a, const Evaluation& b, std::vector<Tfn>& scratch,
                             double* out) const;
  void check_evaluation(const Evaluation& x) const;

  const CriteriaTree& tree_;
  WeightAssignment weights_;
  std::vector<PreferenceSpec> preferences_;
  ProfileSet profiles_;
  DefuzzMethod defuzz_;
  std::size_t categories_;
  std::vector<Evaluation> profile_rows_;
  // P_r(r_h, r_l) for every node, laid out [h][l][node].
  std::vector<double> profile_pairs_;
};

}  // namespace smaaffsh
