#include "smaaffsh/flows.hpp"

#include "smaaffsh/error.hpp"

#include <fmt/format.h>

namespace smaaffsh {

namespace {

std::string criterion_path(const CriteriaTree& tree, std::size_t leaf) {
  return format_path(tree.node(tree.elementary()[leaf]).path);
}

}  // namespace

Evaluation ProfileSet::profile(std::size_t h) const {
  Evaluation row;
  row.reserve(by_criterion.size());
  for (const auto& column : by_criterion) row.push_back(column.at(h));
  return row;
}

bool dominates(const Tfn& better, const Tfn& worse, Direction direction) {
  if (direction == Direction::Maximize) return better.lower() > worse.upper();
  return better.upper() < worse.lower();
}

ValueBounds evaluation_bounds(const std::vector<Tfn>& profiles, Direction direction) {
  const Tfn& best = profiles.front();
  const Tfn& worst = profiles.back();
  if (direction == Direction::Maximize) return {worst.lower(), best.upper()};
  return {best.lower(), worst.upper()};
}

void validate_profiles(const CriteriaTree& tree, std::span<const PreferenceSpec> preferences,
                       const ProfileSet& profiles) {
  if (profiles.by_criterion.size() != tree.leaf_count() || preferences.size() != tree.leaf_count()) {
    throw Error(ErrorCode::Dimension,
                fmt::format("{} profile columns and {} preference functions for {} elementary criteria",
                            profiles.by_criterion.size(), preferences.size(), tree.leaf_count()));
  }
  const std::size_t count = profiles.profile_count();
  if (count < 2) throw Error(ErrorCode::ProfileCount, "at least two limiting profiles are required");
  for (std::size_t t = 0; t < profiles.by_criterion.size(); ++t) {
    const auto& column = profiles.by_criterion[t];
    const std::string where = fmt::format("profiles[{}]", criterion_path(tree, t));
    if (column.size() != count) {
      throw Error(ErrorCode::ProfileCount,
                  fmt::format("{} profiles on this criterion, expected {}", column.size(), count), where);
    }
    for (std::size_t h = 0; h + 1 < column.size(); ++h) {
      const Tfn& better = column[h];
      const Tfn& worse = column[h + 1];
      if (dominates(better, worse, preferences[t].direction)) continue;
      const bool modes_ordered = preferences[t].direction == Direction::Maximize ? better.mode > worse.mode
                                                                                  : better.mode < worse.mode;
      if (modes_ordered) {
        throw Error(ErrorCode::ProfileOverlap,
                    fmt::format("supports of r{} [{}, {}] and r{} [{}, {}] overlap", h + 1, better.lower(),
                                better.upper(), h + 2, worse.lower(), worse.upper()),
                    where);
      }
      throw Error(ErrorCode::ProfileDominance,
                  fmt::format("r{} = {} does not dominate r{} = {}", h + 1, better.mode, h + 2, worse.mode), where);
    }
  }
}

void validate_evaluation(const CriteriaTree& tree, std::span<const PreferenceSpec> preferences,
                         const ProfileSet& profiles, const Evaluation& evaluation) {
  if (evaluation.size() != tree.leaf_count()) {
    throw Error(ErrorCode::Dimension, fmt::format("evaluation has {} values for {} elementary criteria",
                                                  evaluation.size(), tree.leaf_count()));
  }
  for (std::size_t t = 0; t < evaluation.size(); ++t) {
    const auto bounds = evaluation_bounds(profiles.by_criterion[t], preferences[t].direction);
    if (!bounds.contains(evaluation[t])) {
      throw Error(ErrorCode::EvaluationBounds,
                  fmt::format("value [{}, {}] lies outside the profile range [{}, {}]", evaluation[t].lower(),
                              evaluation[t].upper(), bounds.lower, bounds.upper),
                  fmt::format("criterion {}", criterion_path(tree, t)));
    }
  }
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::Positive: return "positive";
    case Rule::Negative: return "negative";
    case Rule::Net: return "net";
  }
  return "net";
}

std::optional<Rule> parse_rule(std::string_view name) {
  if (name == "positive") return Rule::Positive;
  if (name == "negative") return Rule::Negative;
  if (name == "net") return Rule::Net;
  return std::nullopt;
}

std::size_t assign(const NodeFlows& flows, Rule rule, BoundaryPolicy policy, bool* clamped) {
  const auto& profiles = flows.profiles;
  if (profiles.size() < 2) throw Error(ErrorCode::ProfileCount, "at least two profile flows are required");
  const std::size_t k = profiles.size() - 1;
  auto pick = [rule](const Flows& f) {
    switch (rule) {
      case Rule::Positive: return f.positive;
      case Rule::Negative: return f.negative;
      case Rule::Net: return f.net;
    }
    return f.net;
  };
  const double x = pick(flows.alternative);
  if (clamped) *clamped = false;

  // Negative flows grow towards worse categories; the other two shrink.
  const bool ascending = rule == Rule::Negative;
  for (std::size_t h = 0; h < k; ++h) {
    const double upper = pick(profiles[h]);
    const double lower = pick(profiles[h + 1]);
    if (ascending ? upper > lower : upper < lower) {
      throw Error(ErrorCode::ProfileOrder,
                  fmt::format("{} flows of r{} ({}) and r{} ({}) are out of order", to_string(rule), h + 1, upper,
                              h + 2, lower));
    }
  }
  for (std::size_t h = 0; h < k; ++h) {
    const double a = pick(profiles[h]);
    const double b = pick(profiles[h + 1]);
    if (ascending ? (a < x && x <= b) : (a >= x && x > b)) return h;
  }

  const double best = pick(profiles.front());
  const double worst = pick(profiles.back());
  if (ascending ? x == best : x == worst) return ascending ? 0 : k - 1;

  const bool above = ascending ? x < best : x > best;
  if (policy == BoundaryPolicy::Throw) {
    throw Error(ErrorCode::Boundary,
                fmt::format("{} flow {} lies outside the profile range [{}, {}]", to_string(rule), x,
                            std::min(best, worst), std::max(best, worst)));
  }
  if (clamped) *clamped = true;
  return above ? 0 : k - 1;
}

Assignment assign_all(const FlowBundle& bundle, BoundaryPolicy policy) {
  Assignment out;
  out.by_positive = assign(bundle.overall(), Rule::Positive, policy);
  out.by_negative = assign(bundle.overall(), Rule::Negative, policy);
  out.by_net = assign(bundle.overall(), Rule::Net, policy);
  out.by_node.reserve(bundle.nodes.size());
  for (const auto& node : bundle.nodes) out.by_node.push_back(assign(node, Rule::Net, policy));
  return out;
}

FlowSortH::FlowSortH(const CriteriaTree& tree, const WeightAssignment& weights,
                     std::span<const PreferenceSpec> preferences, const ProfileSet& profiles, DefuzzMethod defuzz)
    : tree_(tree),
      weights_(weights),
      preferences_(preferences.begin(), preferences.end()),
      profiles_(profiles),
      defuzz_(defuzz),
      categories_(profiles.category_count()) {
  if (weights_.size() != tree_.size()) {
    throw Error(ErrorCode::Dimension,
                fmt::format("weight assignment has {} entries for {} nodes", weights_.size(), tree_.size()));
  }
  validate_profiles(tree_, preferences_, profiles_);

  const std::size_t count = profiles_.profile_count();
  const std::size_t nodes = tree_.size();
  profile_rows_.reserve(count);
  for (std::size_t h = 0; h < count; ++h) profile_rows_.push_back(profiles_.profile(h));

  profile_pairs_.assign(count * count * nodes, 0.0);
  std::vector<Tfn> scratch(nodes);
  for (std::size_t h = 0; h < count; ++h) {
    for (std::size_t l = 0; l < count; ++l) {
      if (h == l) continue;
      node_preferences_into(profile_rows_[h], profile_rows_[l], scratch, &profile_pairs_[(h * count + l) * nodes]);
    }
  }
}

void FlowSortH::node_preferences_into(const Evaluation& a, const Evaluation& b, std::vector<Tfn>& scratch,
                                      double* out) const {
  const auto nodes = tree_.nodes();
  // Parents precede children, so a reverse sweep sees every child before its parent.
  for (std::size_t i = nodes.size(); i-- > 0;) {
    const auto& node = nodes[i];
    if (node.elementary()) {
      const auto t = static_cast<std::size_t>(node.leaf);
      scratch[i] = fuzzy_preference(preferences_[t], a[t], b[t]);
    } else {
      Tfn sum;
      for (int child : node.children) {
        const auto c = static_cast<std::size_t>(child);
        sum = add(sum, scale(weights_[c], scratch[c]));
      }
      scratch[i] = sum;
    }
    out[i] = defuzzify(scratch[i], defuzz_);
  }
}

void FlowSortH::check_evaluation(const Evaluation& x) const {
  if (x.size() != tree_.leaf_count()) {
    throw Error(ErrorCode::Dimension,
                fmt::format("evaluation has {} values for {} elementary criteria", x.size(), tree_.leaf_count()));
  }
}

std::vector<double> FlowSortH::node_preferences(const Evaluation& a, const Evaluation& b) const {
  check_evaluation(a);
  check_evaluation(b);
  std::vector<Tfn> scratch(tree_.size());
  std::vector<double> out(tree_.size());
  node_preferences_into(a, b, scratch, out.data());
  return out;
}

double FlowSortH::outranking(const Evaluation& a, const Evaluation& b) const {
  return node_preferences(a, b).front();
}

FlowBundle FlowSortH::flows(const Evaluation& x) const {
  check_evaluation(x);
  const std::size_t count = profiles_.profile_count();
  const std::size_t nodes = tree_.size();
  // |R_i| - 1: the profiles plus x, minus the element itself.
  const double denominator = static_cast<double>(count);

  std::vector<double> x_over(count * nodes);
  std::vector<double> over_x(count * nodes);
  std::vector<Tfn> scratch(nodes);
  for (std::size_t h = 0; h < count; ++h) {
    node_preferences_into(x, profile_rows_[h], scratch, &x_over[h * nodes]);
    node_preferences_into(profile_rows_[h], x, scratch, &over_x[h * nodes]);
  }

  FlowBundle bundle;
  bundle.nodes.resize(nodes);
  for (std::size_t r = 0; r < nodes; ++r) {
    NodeFlows& out = bundle.nodes[r];
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t h = 0; h < count; ++h) {
      plus += x_over[h * nodes + r];
      minus += over_x[h * nodes + r];
    }
    out.alternative.positive = plus / denominator;
    out.alternative.negative = minus / denominator;
    out.alternative.net = out.alternative.positive - out.alternative.negative;

    out.profiles.resize(count);
    for (std::size_t h = 0; h < count; ++h) {
      double profile_plus = 0.0;
      double profile_minus = 0.0;
      for (std::size_t l = 0; l < count; ++l) {
        if (l == h) continue;
        profile_plus += profile_pairs_[(h * count + l) * nodes + r];
        profile_minus += profile_pairs_[(l * count + h) * nodes + r];
      }
      profile_plus += over_x[h * nodes + r];
      profile_minus += x_over[h * nodes + r];
      Flows& f = out.profiles[h];
      f.positive = profile_plus / denominator;
      f.negative = profile_minus / denominator;
      f.net = f.positive - f.negative;
    }
  }
  return bundle;
}

}  // namespace smaaffsh
