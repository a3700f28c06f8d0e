#include "instances.hpp"
#include "oracle.hpp"
#include "smaaffsh/error.hpp"
#include "smaaffsh/flows.hpp"
#include "smaaffsh/reference_problems.hpp"
#include "smaaffsh/smaa.hpp"

#include <gtest/gtest.h>

using namespace smaaffsh;

namespace {

struct WorkedExample {
  Problem problem = appendix_a_problem();
  Scenario scenario = central_scenario(problem);
  FlowSortH engine{problem.tree, scenario.weights, scenario.preferences, scenario.profiles};

  int node(const NodePath& path) const { return *problem.tree.find(path); }
};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

NodeFlows node_with(double x, std::vector<double> profile_nets) {
  NodeFlows f;
  f.alternative.net = x;
  f.alternative.positive = x;
  f.alternative.negative = -x;
  for (double v : profile_nets) f.profiles.push_back(Flows{v, -v, v});
  return f;
}

}  // namespace

TEST(FlowSortH, OutrankingDegreesOfTheWorkedExample) {
  WorkedExample a;
  const auto& x1 = a.scenario.evaluations[0];
  const auto r = [&](std::size_t h) { return a.scenario.profiles.profile(h); };
  EXPECT_DOUBLE_EQ(a.engine.outranking(x1, r(0)), 0.0);
  EXPECT_DOUBLE_EQ(a.engine.outranking(x1, r(1)), 1.0);
  EXPECT_DOUBLE_EQ(a.engine.outranking(x1, r(2)), 1.0);
}

TEST(FlowSortH, AlternativeFlowsOfTheWorkedExample) {
  WorkedExample a;
  const auto f1 = a.engine.flows(a.scenario.evaluations[0]).overall();
  EXPECT_NEAR(f1.alternative.positive, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(f1.alternative.negative, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(f1.alternative.net, 1.0 / 3.0, 1e-12);
  const auto f2 = a.engine.flows(a.scenario.evaluations[1]).overall();
  EXPECT_NEAR(f2.alternative.positive, 0.43333333333, 1e-9);
  EXPECT_NEAR(f2.alternative.negative, 0.56666666667, 1e-9);
  EXPECT_NEAR(f2.alternative.net, -0.13333333333, 1e-9);
}

TEST(FlowSortH, ProfileFlowsDependOnTheAlternative) {
  WorkedExample a;
  const auto r1 = a.engine.flows(a.scenario.evaluations[0]).overall().profiles;
  EXPECT_NEAR(r1[0].net, 1.0, 1e-12);
  EXPECT_NEAR(r1[1].positive, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(r1[1].net, -1.0 / 3.0, 1e-12);
  EXPECT_NEAR(r1[2].net, -1.0, 1e-12);
  const auto r2 = a.engine.flows(a.scenario.evaluations[1]).overall().profiles;
  EXPECT_NEAR(r2[1].positive, 0.56666666667, 1e-9);
  EXPECT_NEAR(r2[1].negative, 0.43333333333, 1e-9);
  EXPECT_NEAR(r2[1].net, 0.13333333333, 1e-9);
}

TEST(FlowSortH, AssignmentsOfTheWorkedExample) {
  WorkedExample a;
  const auto x1 = assign_all(a.engine.flows(a.scenario.evaluations[0]));
  EXPECT_EQ(x1.by_positive, 0u);
  EXPECT_EQ(x1.by_negative, 0u);
  EXPECT_EQ(x1.by_net, 0u);
  const auto x2 = assign_all(a.engine.flows(a.scenario.evaluations[1]));
  EXPECT_EQ(x2.by_positive, 1u);
  EXPECT_EQ(x2.by_negative, 1u);
  EXPECT_EQ(x2.by_net, 1u);
  EXPECT_EQ(x2.by_node[static_cast<std::size_t>(a.node({1}))], 0u);
  EXPECT_EQ(x2.by_node[static_cast<std::size_t>(a.node({2}))], 1u);
  EXPECT_EQ(x2.by_node[static_cast<std::size_t>(a.node({2, 1}))], 1u);
  EXPECT_EQ(x2.by_node[static_cast<std::size_t>(a.node({2, 2}))], 1u);
}

TEST(FlowSortH, SingleCriterionFlowsOfTheWorkedExample) {
  WorkedExample a;
  const auto bundle = a.engine.flows(a.scenario.evaluations[1]);
  const auto& g1 = bundle.nodes[static_cast<std::size_t>(a.node({1}))];
  EXPECT_NEAR(g1.alternative.positive, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(g1.alternative.net, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(g1.profiles[1].net, -1.0 / 3.0, 1e-12);
  const auto& g2 = bundle.nodes[static_cast<std::size_t>(a.node({2}))];
  EXPECT_NEAR(g2.alternative.positive, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(g2.alternative.net, -1.0 / 3.0, 1e-12);
  EXPECT_NEAR(g2.profiles[1].net, 1.0 / 3.0, 1e-12);
}

TEST(FlowSortH, MatchesFlatOracleOnAllNodes) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 25; ++n) {
    instances::Options options;
    options.fuzzy = n % 2 == 1;
    options.max_depth = 3;
    const auto inst = instances::random_instance(rng, options);
    const FlowSortH engine(*inst.tree, inst.weights, inst.preferences, inst.profiles);
    for (const auto& x : inst.alternatives) {
      const auto bundle = engine.flows(x);
      for (std::size_t r = 0; r < inst.tree->size(); ++r) {
        const auto expected = oracle::node_flows(*inst.tree, inst.weights, inst.preferences, inst.profiles, x,
                                                 static_cast<int>(r));
        EXPECT_NEAR(bundle.nodes[r].alternative.net, expected.net, 1e-12);
        for (std::size_t h = 0; h < expected.profile_net.size(); ++h) {
          EXPECT_NEAR(bundle.nodes[r].profiles[h].positive, expected.profile_positive[h], 1e-12);
          EXPECT_NEAR(bundle.nodes[r].profiles[h].negative, expected.profile_negative[h], 1e-12);
        }
      }
    }
  }
}

TEST(FlowSortH, AlternativeAtWorstProfileGoesToWorstCategory) {
  WorkedExample a;
  const auto worst = a.scenario.profiles.profile(2);
  const auto f = a.engine.flows(worst).overall();
  EXPECT_EQ(f.alternative.net, f.profiles[2].net);
  EXPECT_EQ(assign(f, Rule::Net), 1u);
  const auto best = a.scenario.profiles.profile(0);
  EXPECT_EQ(assign(a.engine.flows(best).overall(), Rule::Net), 0u);
}

TEST(Assign, TiesFollowTheWeakInequality) {
  // Net and positive flows equal to phi(r_h) land in C_h; negative flows equal to phi-(r_{h+1}) land in C_h.
  const auto f = node_with(0.2, {1.0, 0.2, -0.5, -1.0});
  EXPECT_EQ(assign(f, Rule::Net), 1u);
  EXPECT_EQ(assign(f, Rule::Positive), 1u);
  EXPECT_EQ(assign(f, Rule::Negative), 0u);
  EXPECT_EQ(assign(node_with(-0.5, {1.0, 0.2, -0.5, -1.0}), Rule::Net), 2u);
  EXPECT_EQ(assign(node_with(1.0, {1.0, 0.2, -0.5, -1.0}), Rule::Net), 0u);
  EXPECT_EQ(assign(node_with(-1.0, {1.0, 0.2, -0.5, -1.0}), Rule::Net), 2u);
}

TEST(Assign, OutOfRangeThrowsOrClamps) {
  const auto above = node_with(1.5, {1.0, 0.0, -1.0});
  EXPECT_EQ(code_of([&] { assign(above, Rule::Net); }), ErrorCode::Boundary);
  bool clamped = false;
  EXPECT_EQ(assign(above, Rule::Net, BoundaryPolicy::Clamp, &clamped), 0u);
  EXPECT_TRUE(clamped);
  EXPECT_EQ(assign(node_with(-1.5, {1.0, 0.0, -1.0}), Rule::Net, BoundaryPolicy::Clamp, &clamped), 1u);
  EXPECT_TRUE(clamped);
}

TEST(Assign, NonMonotoneProfilesAreRejected) {
  EXPECT_EQ(code_of([] { assign(node_with(0.0, {1.0, -0.5, 0.2, -1.0}), Rule::Net); }), ErrorCode::ProfileOrder);
}

TEST(Profiles, ValidationCodes) {
  WorkedExample a;
  auto profiles = a.scenario.profiles;
  profiles.by_criterion[0] = {Tfn{10, 0, 0}, Tfn{5, 0, 6}, Tfn::crisp(0)};
  EXPECT_EQ(code_of([&] { validate_profiles(a.problem.tree, a.scenario.preferences, profiles); }),
            ErrorCode::ProfileOverlap);
  profiles.by_criterion[0] = {Tfn::crisp(5), Tfn::crisp(10), Tfn::crisp(0)};
  EXPECT_EQ(code_of([&] { validate_profiles(a.problem.tree, a.scenario.preferences, profiles); }),
            ErrorCode::ProfileDominance);
  profiles.by_criterion[0] = {Tfn::crisp(10), Tfn::crisp(0)};
  EXPECT_EQ(code_of([&] { validate_profiles(a.problem.tree, a.scenario.preferences, profiles); }),
            ErrorCode::ProfileCount);
}

TEST(Profiles, EvaluationOutsideRangeIsRejected) {
  WorkedExample a;
  auto x = a.scenario.evaluations[0];
  x[0] = Tfn::crisp(11);
  EXPECT_EQ(code_of([&] { validate_evaluation(a.problem.tree, a.scenario.preferences, a.scenario.profiles, x); }),
            ErrorCode::EvaluationBounds);
  x[0] = Tfn{9.5, 0, 1};
  EXPECT_EQ(code_of([&] { validate_evaluation(a.problem.tree, a.scenario.preferences, a.scenario.profiles, x); }),
            ErrorCode::EvaluationBounds);
}

TEST(Rules, NamesRoundTrip) {
  for (auto rule : {Rule::Positive, Rule::Negative, Rule::Net}) EXPECT_EQ(parse_rule(to_string(rule)), rule);
  EXPECT_FALSE(parse_rule("mixed"));
}
