#include "smaaffsh/hierarchy.hpp"

#include "smaaffsh/error.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <numeric>
#include <set>

namespace smaaffsh {

namespace {

constexpr double kSumTolerance = 1e-9;

void append_node(std::vector<CriterionNode>& nodes, std::vector<int>& elementary, const TreeSpec& spec,
                 int parent, NodePath path) {
  const int index = static_cast<int>(nodes.size());
  CriterionNode node;
  node.path = path;
  node.label = spec.label;
  node.parent = parent;
  node.child_weights = spec.weights;
  nodes.push_back(std::move(node));
  if (parent >= 0) nodes[static_cast<std::size_t>(parent)].children.push_back(index);

  const std::string where = path.empty() ? std::string("tree") : fmt::format("tree[{}]", format_path(path));
  if (spec.children.empty()) {
    if (parent >= 0) {
      nodes[static_cast<std::size_t>(index)].leaf = static_cast<int>(elementary.size());
      elementary.push_back(index);
    }
    return;
  }

  std::set<std::string> labels;
  for (const auto& child : spec.children) {
    if (!labels.insert(child.label).second) {
      throw Error(ErrorCode::Tree, fmt::format("duplicate sibling label '{}'", child.label), where);
    }
  }
  try {
    validate_weight_spec(spec.weights, spec.children.size());
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), where + ".weights");
  }

  for (std::size_t s = 0; s < spec.children.size(); ++s) {
    NodePath child_path = path;
    child_path.push_back(static_cast<int>(s) + 1);
    append_node(nodes, elementary, spec.children[s], index, std::move(child_path));
  }
}

}  // namespace

std::string format_path(const NodePath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

std::optional<NodePath> parse_path(std::string_view text) {
  NodePath path;
  while (!text.empty()) {
    const auto dot = text.find('.');
    const auto part = text.substr(0, dot);
    int value = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || end != part.data() + part.size() || value < 1) return std::nullopt;
    path.push_back(value);
    if (dot == std::string_view::npos) break;
    text.remove_prefix(dot + 1);
    if (text.empty()) return std::nullopt;
  }
  if (path.empty()) return std::nullopt;
  return path;
}

WeightSpec WeightSpec::deterministic(std::vector<double> values) {
  WeightSpec spec;
  spec.kind = WeightKind::Deterministic;
  spec.values = std::move(values);
  return spec;
}

WeightSpec WeightSpec::ordinal(std::vector<std::optional<int>> ranks) {
  WeightSpec spec;
  spec.kind = WeightKind::Ordinal;
  spec.ranks = std::move(ranks);
  return spec;
}

WeightSpec WeightSpec::interval(std::vector<WeightBounds> bounds) {
  WeightSpec spec;
  spec.kind = WeightKind::Interval;
  spec.bounds = std::move(bounds);
  return spec;
}

WeightSpec WeightSpec::missing() { return {}; }

bool WeightSpec::is_fixed() const { return kind == WeightKind::Deterministic; }

std::string_view to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::Deterministic: return "deterministic";
    case WeightKind::Ordinal: return "ordinal";
    case WeightKind::Interval: return "interval";
    case WeightKind::Missing: return "missing";
  }
  return "missing";
}

void validate_weight_spec(const WeightSpec& spec, std::size_t siblings) {
  auto fail = [](const std::string& message) { throw Error(ErrorCode::WeightSpec, message); };
  switch (spec.kind) {
    case WeightKind::Deterministic: {
      if (spec.values.size() != siblings) {
        fail(fmt::format("{} deterministic weights for {} criteria", spec.values.size(), siblings));
      }
      for (double w : spec.values) {
        if (!(w > 0.0)) fail(fmt::format("deterministic weight {} is not positive", w));
      }
      const double sum = std::accumulate(spec.values.begin(), spec.values.end(), 0.0);
      if (std::abs(sum - 1.0) > kSumTolerance) fail(fmt::format("deterministic weights sum to {}, not 1", sum));
      break;
    }
    case WeightKind::Ordinal:
      if (spec.ranks.size() != siblings) {
        fail(fmt::format("{} ranks for {} criteria", spec.ranks.size(), siblings));
      }
      for (const auto& rank : spec.ranks) {
        if (rank && *rank < 1) fail(fmt::format("rank {} is not a positive integer", *rank));
      }
      break;
    case WeightKind::Interval: {
      if (spec.bounds.size() != siblings) {
        fail(fmt::format("{} weight intervals for {} criteria", spec.bounds.size(), siblings));
      }
      double lower_sum = 0.0;
      double upper_sum = 0.0;
      for (const auto& b : spec.bounds) {
        if (!(0.0 <= b.lower && b.lower <= b.upper && b.upper <= 1.0)) {
          fail(fmt::format("weight interval [{}, {}] must satisfy 0 <= lower <= upper <= 1", b.lower, b.upper));
        }
        lower_sum += b.lower;
        upper_sum += b.upper;
      }
      if (lower_sum > 1.0 + kSumTolerance || upper_sum < 1.0 - kSumTolerance) {
        fail(fmt::format("weight intervals do not intersect the simplex (sum of lower {}, sum of upper {})",
                         lower_sum, upper_sum));
      }
      break;
    }
    case WeightKind::Missing:
      break;
  }
}

CriteriaTree CriteriaTree::build(const TreeSpec& root) {
  if (root.children.empty()) throw Error(ErrorCode::Tree, "criteria tree has no criteria", "tree");
  CriteriaTree tree;
  append_node(tree.nodes_, tree.elementary_, root, -1, {});
  return tree;
}

std::vector<NodePath> CriteriaTree::elementary_indices() const {
  std::vector<NodePath> paths;
  paths.reserve(elementary_.size());
  for (int index : elementary_) paths.push_back(node(index).path);
  return paths;
}

std::optional<int> CriteriaTree::find(const NodePath& path) const {
  int current = 0;
  for (int step : path) {
    const auto& children = node(current).children;
    if (step < 1 || static_cast<std::size_t>(step) > children.size()) return std::nullopt;
    current = children[static_cast<std::size_t>(step - 1)];
  }
  return current;
}

std::vector<int> CriteriaTree::descendants_elementary(int index) const {
  std::vector<int> out;
  std::vector<int> stack{index};
  while (!stack.empty()) {
    const int current = stack.back();
    stack.pop_back();
    const auto& n = node(current);
    if (n.elementary()) {
      out.push_back(current);
      continue;
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

double CriteriaTree::effective_weight(const NodePath& path, const WeightAssignment& weights) const {
  const auto found = find(path);
  if (!found || path.empty()) {
    throw Error(ErrorCode::UnknownNode, fmt::format("no criterion at path '{}'", format_path(path)));
  }
  if (weights.size() != nodes_.size()) {
    throw Error(ErrorCode::Dimension,
                fmt::format("weight assignment has {} entries for {} nodes", weights.size(), nodes_.size()));
  }
  double product = 1.0;
  for (int current = *found; current > 0; current = node(current).parent) {
    product *= weights[static_cast<std::size_t>(current)];
  }
  return product;
}

WeightAssignment CriteriaTree::fixed_weights() const {
  WeightAssignment weights(nodes_.size(), 1.0);
  for (const auto& n : nodes_) {
    if (n.elementary()) continue;
    if (n.children.size() == 1) continue;
    if (!n.child_weights.is_fixed()) {
      throw Error(ErrorCode::WeightSpec, "weights are not deterministic",
                  n.path.empty() ? "tree.weights" : fmt::format("tree[{}].weights", format_path(n.path)));
    }
    for (std::size_t s = 0; s < n.children.size(); ++s) {
      weights[static_cast<std::size_t>(n.children[s])] = n.child_weights.values[s];
    }
  }
  return weights;
}

}  // namespace smaaffsh
