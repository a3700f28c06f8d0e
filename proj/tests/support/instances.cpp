#include "instances.hpp"

#include <algorithm>

namespace instances {

using namespace smaaffsh;

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& x : w) {
    x = 0.05 + std::exponential_distribution<double>(1.0)(rng);
    sum += x;
  }
  for (auto& x : w) x /= sum;
  return w;
}

void grow(std::mt19937_64& rng, const Options& options, TreeSpec& node, int depth, int target, int& label) {
  const int children = uniform_int(rng, options.min_children, options.max_children);
  for (int c = 0; c < children; ++c) {
    TreeSpec child;
    child.label = "c" + std::to_string(label++);
    // The first child always reaches the target depth; the others may stop early.
    const bool deepen = depth + 1 < target && (c == 0 || uniform(rng, 0.0, 1.0) < 0.6);
    if (deepen) grow(rng, options, child, depth + 1, target, label);
    node.children.push_back(std::move(child));
  }
  node.weights = WeightSpec::deterministic(random_simplex(rng, node.children.size()));
  // Renormalize against rounding so the spec validates at 1e-9.
  double sum = 0.0;
  for (double w : node.weights.values) sum += w;
  node.weights.values.back() += 1.0 - sum;
}

}  // namespace

TreeSpec random_tree(std::mt19937_64& rng, const Options& options) {
  TreeSpec root;
  int label = 0;
  grow(rng, options, root, 0, uniform_int(rng, options.min_depth, options.max_depth), label);
  return root;
}

Instance random_instance(std::mt19937_64& rng, const Options& options) {
  Instance inst;
  inst.tree = std::make_unique<CriteriaTree>(CriteriaTree::build(random_tree(rng, options)));
  inst.weights = inst.tree->fixed_weights();
  const std::size_t leaves = inst.tree->leaf_count();
  const int categories = uniform_int(rng, options.min_categories, options.max_categories);

  inst.profiles.by_criterion.resize(leaves);
  std::vector<std::pair<double, double>> ranges(leaves);
  for (std::size_t t = 0; t < leaves; ++t) {
    PreferenceSpec spec;
    spec.direction = uniform(rng, 0.0, 1.0) < 0.5 ? Direction::Maximize : Direction::Minimize;
    if (uniform(rng, 0.0, 1.0) < 0.5) {
      spec.shape = Shape::Usual;
    } else {
      spec.shape = Shape::VShapeIndifference;
      spec.q = uniform(rng, 0.0, 1.0);
      spec.p = spec.q + uniform(rng, 0.1, 2.0);
    }
    inst.preferences.push_back(spec);

    // Profiles from best to worst in "goodness" units, then oriented.
    const double spread = options.fuzzy ? 0.5 : 0.0;
    std::vector<Tfn> column;
    double level = uniform(rng, 50.0, 100.0);
    for (int h = 0; h <= categories; ++h) {
      Tfn value{level, spread * uniform(rng, 0.0, 1.0), spread * uniform(rng, 0.0, 1.0)};
      column.push_back(value);
      level -= 2.0 * spread + spec.p + uniform(rng, 0.5, 10.0);
    }
    if (spec.direction == Direction::Minimize) {
      for (auto& v : column) v = Tfn{-v.mode, v.right, v.left};
    }
    inst.profiles.by_criterion[t] = column;
    const auto bounds = evaluation_bounds(column, spec.direction);
    ranges[t] = {bounds.lower, bounds.upper};
  }

  for (int i = 0; i < options.alternatives; ++i) {
    Evaluation x(leaves);
    for (std::size_t t = 0; t < leaves; ++t) {
      const auto [lo, hi] = ranges[t];
      if (options.fuzzy) {
        const double left = uniform(rng, 0.0, 0.5);
        const double right = uniform(rng, 0.0, 0.5);
        x[t] = Tfn{uniform(rng, lo + left, hi - right), left, right};
      } else {
        x[t] = Tfn::crisp(uniform(rng, lo, hi));
      }
    }
    inst.alternatives.push_back(std::move(x));
  }
  return inst;
}

}  // namespace instances
