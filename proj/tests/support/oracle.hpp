#pragma once

// Reference implementations kept apart from the library: a flat FlowSort over
// elementary criteria with explicit weights, with its own preference functions.

#include "smaaffsh/flows.hpp"
#include "smaaffsh/problem.hpp"
#include "smaaffsh/smaa.hpp"

#include <vector>

namespace oracle {

double preference(const smaaffsh::PreferenceSpec& spec, double d);

/// Centroid of the fuzzy preference of a over b: mean of P at d - sL, d, d + sR
/// for the oriented difference (d; sL; sR).
double fuzzy_preference_centroid(const smaaffsh::PreferenceSpec& spec, const smaaffsh::Tfn& a,
                                 const smaaffsh::Tfn& b);

struct FlatFlows {
  double positive = 0.0;
  double negative = 0.0;
  double net = 0.0;
  std::vector<double> profile_positive;
  std::vector<double> profile_negative;
  std::vector<double> profile_net;
};

/// Flat FlowSort on the given criteria subset with the given weights.
/// profiles[h][t], x[t] over all elementary criteria; `criteria` selects t.
FlatFlows flat_flows(const std::vector<int>& criteria, const std::vector<double>& weights,
                     const std::vector<smaaffsh::PreferenceSpec>& prefs,
                     const std::vector<std::vector<smaaffsh::Tfn>>& profiles, const std::vector<smaaffsh::Tfn>& x);

/// Net-rule category (0-based) with ties to the better category; -1 when outside.
int flat_assign_net(const FlatFlows& f);

/// Flat flows of node `node` of a hierarchical scenario: leaves below it, with
/// weights equal to the product of weights from the node down.
FlatFlows node_flows(const smaaffsh::CriteriaTree& tree, const smaaffsh::WeightAssignment& weights,
                     const std::vector<smaaffsh::PreferenceSpec>& prefs, const smaaffsh::ProfileSet& profiles,
                     const std::vector<smaaffsh::Tfn>& x, int node);

}  // namespace oracle
