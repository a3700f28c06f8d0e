#include "smaaffsh/reference_problems.hpp"

#include "smaaffsh/error.hpp"
#include "smaaffsh/smaa.hpp"

#include <fmt/format.h>

namespace smaaffsh {

namespace {

std::string fixed3(double v) { return fmt::format("{:.3f}", v == 0.0 ? 0.0 : v); }

std::vector<StochasticValue> crisp_values(std::initializer_list<double> values) {
  std::vector<StochasticValue> out;
  for (double v : values) out.emplace_back(CrispValue{v});
  return out;
}

std::string node_name(const CriteriaTree& tree, int index) {
  return fmt::format("g{}", format_path(tree.node(index).path));
}

std::string appendix_a_walkthrough() {
  const Problem problem = appendix_a_problem();
  const auto& tree = problem.tree;
  const Scenario scenario = central_scenario(problem);
  const FlowSortH engine(tree, scenario.weights, scenario.preferences, scenario.profiles);
  const auto& profiles = scenario.profiles;
  const std::size_t count = profiles.profile_count();
  const std::size_t leaves = tree.leaf_count();

  std::string out = "FlowSort-H numerical example\n\nCriteria and weights\n";
  for (std::size_t r = 1; r < tree.size(); ++r) {
    const auto& node = tree.node(static_cast<int>(r));
    std::string line = fmt::format("  {}{}  w = {}", std::string(2 * (node.level() - 1), ' '),
                                   node_name(tree, static_cast<int>(r)), scenario.weights[r]);
    if (node.elementary()) {
      line += fmt::format("  effective {:.2f}  {}", tree.effective_weight(node.path, scenario.weights),
                          scenario.preferences[static_cast<std::size_t>(node.leaf)].direction == Direction::Maximize
                              ? "maximize"
                              : "minimize");
    }
    out += line + "\n";
  }

  out += "\nPerformance table\n";
  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    out += fmt::format("  {}:", problem.alternatives[i].name);
    for (const auto& v : scenario.evaluations[i]) out += fmt::format(" {}", v.mode);
    out += "\n";
  }
  for (std::size_t h = 0; h < count; ++h) {
    out += fmt::format("  r{}:", h + 1);
    for (const auto& v : profiles.profile(h)) out += fmt::format(" {}", v.mode);
    out += "\n";
  }

  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    const auto& name = problem.alternatives[i].name;
    const auto& x = scenario.evaluations[i];
    out += fmt::format("\nPreference values of {} (usual criterion)\n", name);
    for (std::size_t t = 0; t < leaves; ++t) {
      const int node = tree.elementary()[t];
      for (std::size_t h = 0; h < count; ++h) {
        const auto& pref = scenario.preferences[t];
        const Tfn r = profiles.by_criterion[t][h];
        out += fmt::format("  P_{}({},r{}) = {}   P_{}(r{},{}) = {}\n", node_name(tree, node), name, h + 1,
                           fixed3(defuzzify(fuzzy_preference(pref, x[t], r))), node_name(tree, node), h + 1, name,
                           fixed3(defuzzify(fuzzy_preference(pref, r, x[t]))));
      }
    }

    out += fmt::format("\nOutranking degrees of {}\n", name);
    for (std::size_t h = 0; h < count; ++h) {
      const auto row = profiles.profile(h);
      out += fmt::format("  π({},r{}) = {}   π(r{},{}) = {}\n", name, h + 1, fixed3(engine.outranking(x, row)), h + 1,
                         name, fixed3(engine.outranking(row, x)));
    }

    const FlowBundle bundle = engine.flows(x);
    const auto& overall = bundle.overall();
    out += fmt::format("\nFlows of {}\n", name);
    out += fmt::format("  φ+({}) = {}\n  φ-({}) = {}\n  φ({}) = {}\n", name, fixed3(overall.alternative.positive),
                       name, fixed3(overall.alternative.negative), name, fixed3(overall.alternative.net));
    out += fmt::format("Profile flows in R{}\n", i + 1);
    for (std::size_t h = 0; h < count; ++h) {
      const auto& f = overall.profiles[h];
      out += fmt::format("  r{}: φ+ = {}  φ- = {}  φ = {}\n", h + 1, fixed3(f.positive), fixed3(f.negative),
                         fixed3(f.net));
    }
    const Assignment a = assign_all(bundle);
    out += fmt::format("Assignment of {}: positive {}, negative {}, net {}\n", name,
                       problem.categories[a.by_positive], problem.categories[a.by_negative],
                       problem.categories[a.by_net]);

    out += fmt::format("\nSingle-criterion flows of {}\n", name);
    for (std::size_t r = 1; r < tree.size(); ++r) {
      const auto& node_flows = bundle.nodes[r];
      out += fmt::format("  φ_{}({}) = {}  (φ+ = {}, φ- = {})  profiles:", node_name(tree, static_cast<int>(r)), name,
                         fixed3(node_flows.alternative.net), fixed3(node_flows.alternative.positive),
                         fixed3(node_flows.alternative.negative));
      for (std::size_t h = 0; h < count; ++h) out += fmt::format(" r{} = {}", h + 1, fixed3(node_flows.profiles[h].net));
      out += fmt::format("  → {}\n", problem.categories[a.by_node[r]]);
    }
  }

  out += "\nFinal assignments (net flow)\n";
  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    const Assignment a = assign_all(engine.flows(scenario.evaluations[i]));
    out += fmt::format("{} → {}\n", problem.alternatives[i].name, problem.categories[a.by_net]);
  }
  return out;
}

}  // namespace

Problem appendix_a_problem() {
  TreeSpec root;
  root.weights = WeightSpec::deterministic({0.3, 0.7});
  TreeSpec g1{"g1", WeightSpec::deterministic({0.2, 0.8}), {TreeSpec{"g1.1", {}, {}}, TreeSpec{"g1.2", {}, {}}}};
  TreeSpec g2{"g2", WeightSpec::deterministic({0.4, 0.6}), {TreeSpec{"g2.1", {}, {}}, TreeSpec{"g2.2", {}, {}}}};
  root.children = {g1, g2};

  Problem problem;
  problem.name = "appendix-a";
  problem.tree = CriteriaTree::build(root);
  problem.categories = {"C1", "C2"};
  for (Direction d : {Direction::Maximize, Direction::Minimize, Direction::Maximize, Direction::Maximize}) {
    PreferenceModel model;
    model.shape = Shape::Usual;
    model.direction = d;
    problem.preferences.push_back(model);
  }
  problem.profiles = {crisp_values({10, 5, 0}), crisp_values({0, 5, 10}), crisp_values({20, 10, 0}),
                      crisp_values({30, 15, 0})};
  problem.alternatives = {Alternative{"x1", crisp_values({8, 1, 16, 28})},
                          Alternative{"x2", crisp_values({9, 3, 8, 12})}};
  return problem;
}

std::vector<std::string> example_names() { return {"appendix-a"}; }

std::string example_walkthrough(std::string_view name) {
  if (name == "appendix-a") return appendix_a_walkthrough();
  throw Error(ErrorCode::UnknownExample,
              fmt::format("unknown example '{}'; available: appendix-a", name));
}

}  // namespace smaaffsh
