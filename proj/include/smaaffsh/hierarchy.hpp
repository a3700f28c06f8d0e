#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smaaffsh {

/// 1-based sibling indices from the first level down, e.g. (2, 1) is the first
/// sub-criterion of the second first-level criterion. The empty path is the
/// virtual root that groups the first-level criteria.
using NodePath = std::vector<int>;

std::string format_path(const NodePath& path);
std::optional<NodePath> parse_path(std::string_view text);

enum class WeightKind { Deterministic, Ordinal, Interval, Missing };

struct WeightBounds {
  double lower = 0.0;
  double upper = 1.0;
  friend bool operator==(const WeightBounds&, const WeightBounds&) = default;
};

/// Weight information for one sibling group. Stored on the parent node.
struct WeightSpec {
  WeightKind kind = WeightKind::Missing;
  std::vector<double> values;            // deterministic
  std::vector<std::optional<int>> ranks;  // ordinal, 1 = most important, nullopt = unranked
  std::vector<WeightBounds> bounds;      // interval

  static WeightSpec deterministic(std::vector<double> values);
  static WeightSpec ordinal(std::vector<std::optional<int>> ranks);
  static WeightSpec interval(std::vector<WeightBounds> bounds);
  static WeightSpec missing();

  /// True when the group has exactly one admissible weight vector.
  bool is_fixed() const;

  friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

std::string_view to_string(WeightKind kind);

/// Throws Error(WeightSpec) when the spec is inconsistent with `siblings` children.
void validate_weight_spec(const WeightSpec& spec, std::size_t siblings);

/// Declarative tree description. The top-level object is the virtual root; its
/// label is ignored and its children are the first-level criteria.
struct TreeSpec {
  std::string label;
  WeightSpec weights;
  std::vector<TreeSpec> children;
};

struct CriterionNode {
  NodePath path;
  std::string label;
  int parent = -1;
  std::vector<int> children;
  WeightSpec child_weights;
  /// Position in the elementary ordering, or -1 for internal nodes.
  int leaf = -1;

  bool elementary() const { return children.empty(); }
  std::size_t level() const { return path.size(); }
};

/// Concrete weight per node (indexed like CriteriaTree::nodes()); the root entry is 1.
using WeightAssignment = std::vector<double>;

/// Immutable criteria hierarchy. Nodes are stored in depth-first declaration
/// order with the virtual root at index 0, so every parent precedes its children.
class CriteriaTree {
 public:
  static CriteriaTree build(const TreeSpec& root);

  std::span<const CriterionNode> nodes() const { return nodes_; }
  const CriterionNode& node(int index) const { return nodes_.at(static_cast<std::size_t>(index)); }
  std::size_t size() const { return nodes_.size(); }

  /// Node indices of the elementary criteria, in canonical order.
  std::span<const int> elementary() const { return elementary_; }
  std::size_t leaf_count() const { return elementary_.size(); }
  std::vector<NodePath> elementary_indices() const;

  std::vector<int> first_level() const { return nodes_.front().children; }
  std::optional<int> find(const NodePath& path) const;
  /// Leaf node indices below `index` (the node itself when elementary).
  std::vector<int> descendants_elementary(int index) const;

  /// Product of the weights along the path from the first level down to `path`.
  /// Throws Error(UnknownNode) for a path that is not in the tree.
  double effective_weight(const NodePath& path, const WeightAssignment& weights) const;

  /// Per-node weights for a tree whose weight specs are all fixed.
  /// Throws Error(WeightSpec) when a group is not deterministic.
  WeightAssignment fixed_weights() const;

 private:
  std::vector<CriterionNode> nodes_;
  std::vector<int> elementary_;
};

}  // namespace smaaffsh
