#include "smaaffsh/smaa.hpp"

#include "smaaffsh/error.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

namespace smaaffsh {

namespace {

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

double draw(const DistributionValue& d, Rng& rng) {
  switch (d.family) {
    case Family::Normal:
      return std::normal_distribution<double>(d.params[0], d.params[1])(rng);
    case Family::Uniform:
      return std::uniform_real_distribution<double>(d.params[0], d.params[1])(rng);
    case Family::Triangular: {
      const std::array<double, 3> knots{d.params[0], d.params[1], d.params[2]};
      const std::array<double, 3> density{0.0, 1.0, 0.0};
      return std::piecewise_linear_distribution<double>(knots.begin(), knots.end(), density.begin())(rng);
    }
    case Family::LogNormal:
      return std::lognormal_distribution<double>(d.params[0], d.params[1])(rng);
  }
  return 0.0;
}

double draw_crisp(const StochasticValue& value, Rng& rng) {
  if (const auto* crisp = std::get_if<CrispValue>(&value)) return crisp->value;
  if (const auto* interval = std::get_if<IntervalValue>(&value)) {
    return std::uniform_real_distribution<double>(interval->lower, interval->upper)(rng);
  }
  if (const auto* dist = std::get_if<DistributionValue>(&value)) return draw(*dist, rng);
  return std::get<FuzzyValue>(value).value.mode;
}

struct Counts {
  std::vector<std::size_t> category;  // [alternative][category]
  std::vector<std::size_t> by_node;   // [node][alternative][category]
  std::size_t boundary = 0;
};

}  // namespace

Rng iteration_rng(std::uint64_t seed, std::uint64_t iteration) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(iteration), static_cast<std::uint32_t>(iteration >> 32)};
  return Rng(seq);
}

std::vector<double> simplex_from_uniforms(std::vector<double> uniforms) {
  std::sort(uniforms.begin(), uniforms.end());
  std::vector<double> weights(uniforms.size() + 1);
  double previous = 0.0;
  for (std::size_t j = 0; j < uniforms.size(); ++j) {
    weights[j] = uniforms[j] - previous;
    previous = uniforms[j];
  }
  weights.back() = 1.0 - previous;
  return weights;
}

std::vector<double> sample_weights_missing(std::size_t n, Rng& rng) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot sample weights for an empty sibling group");
  std::vector<double> uniforms(n - 1);
  for (auto& u : uniforms) u = uniform01(rng);
  return simplex_from_uniforms(std::move(uniforms));
}

std::vector<double> ordinal_from_simplex(std::span<const std::optional<int>> ranks, std::vector<double> point) {
  if (ranks.size() != point.size()) {
    throw Error(ErrorCode::Dimension, fmt::format("{} ranks for {} weights", ranks.size(), point.size()));
  }
  std::vector<std::size_t> ranked;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i]) ranked.push_back(i);
  }
  std::vector<double> values;
  values.reserve(ranked.size());
  for (std::size_t i : ranked) values.push_back(point[i]);
  std::sort(values.begin(), values.end(), std::greater<>());
  std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) { return *ranks[a] < *ranks[b]; });

  for (std::size_t begin = 0; begin < ranked.size();) {
    std::size_t end = begin + 1;
    while (end < ranked.size() && *ranks[ranked[end]] == *ranks[ranked[begin]]) ++end;
    double sum = 0.0;
    for (std::size_t pos = begin; pos < end; ++pos) sum += values[pos];
    const double share = sum / static_cast<double>(end - begin);
    for (std::size_t pos = begin; pos < end; ++pos) point[ranked[pos]] = share;
    begin = end;
  }
  return point;
}

std::vector<double> sample_weights_ordinal(std::span<const std::optional<int>> ranks, Rng& rng) {
  return ordinal_from_simplex(ranks, sample_weights_missing(ranks.size(), rng));
}

std::vector<double> sample_weights_interval(std::span<const WeightBounds> bounds, Rng& rng,
                                            std::size_t max_attempts) {
  // Uniform draws on the simplex shrunk onto the lower bounds; only the upper bounds need rejection.
  double lower_sum = 0.0;
  for (const auto& b : bounds) lower_sum += b.lower;
  const double slack = 1.0 - lower_sum;
  for (std::size_t attempt = 0; slack > 1e-12 && attempt < max_attempts; ++attempt) {
    auto w = sample_weights_missing(bounds.size(), rng);
    bool inside = true;
    for (std::size_t j = 0; j < w.size() && inside; ++j) {
      w[j] = bounds[j].lower + slack * w[j];
      inside = w[j] <= bounds[j].upper;
    }
    if (inside) return w;
  }
  std::vector<std::string> text;
  for (const auto& b : bounds) text.push_back(fmt::format("[{}, {}]", b.lower, b.upper));
  throw Error(ErrorCode::Infeasible,
              fmt::format("no weight vector within bounds {} after {} attempts; declare degenerate intervals "
                          "as deterministic weights",
                          fmt::join(text, ", "), max_attempts));
}

std::vector<double> sample_weights(const WeightSpec& spec, std::size_t n, Rng& rng, std::size_t max_attempts) {
  switch (spec.kind) {
    case WeightKind::Deterministic:
      return spec.values;
    case WeightKind::Ordinal:
      return sample_weights_ordinal(spec.ranks, rng);
    case WeightKind::Interval:
      return sample_weights_interval(spec.bounds, rng, max_attempts);
    case WeightKind::Missing:
      return sample_weights_missing(n, rng);
  }
  return {};
}

WeightAssignment sample_weight_assignment(const CriteriaTree& tree, Rng& rng, std::size_t max_attempts) {
  WeightAssignment weights(tree.size(), 1.0);
  for (const auto& node : tree.nodes()) {
    if (node.elementary()) continue;
    const auto group = sample_weights(node.child_weights, node.children.size(), rng, max_attempts);
    for (std::size_t s = 0; s < node.children.size(); ++s) {
      weights[static_cast<std::size_t>(node.children[s])] = group[s];
    }
  }
  return weights;
}

Tfn sample_value(const StochasticValue& value, Rng& rng, std::optional<ValueBounds> bounds,
                 std::size_t max_attempts) {
  if (const auto* crisp = std::get_if<CrispValue>(&value)) return Tfn::crisp(crisp->value);
  if (const auto* fuzzy = std::get_if<FuzzyValue>(&value)) return fuzzy->value;

  std::optional<ValueBounds> own;
  if (const auto* dist = std::get_if<DistributionValue>(&value)) own = dist->bounds;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    const double x = draw_crisp(value, rng);
    const Tfn candidate = Tfn::crisp(x);
    if ((!own || own->contains(candidate)) && (!bounds || bounds->contains(candidate))) return candidate;
  }
  throw Error(ErrorCode::Infeasible,
              fmt::format("no draw inside [{}, {}] after {} attempts", bounds ? bounds->lower : own->lower,
                          bounds ? bounds->upper : own->upper, max_attempts));
}

PreferenceSpec sample_preference(const PreferenceModel& model, Rng& rng, std::size_t max_attempts) {
  PreferenceSpec spec;
  spec.shape = model.shape;
  spec.direction = model.direction;
  const bool random = (uses_q(model.shape) && is_random(model.q)) || (uses_p(model.shape) && is_random(model.p)) ||
                      (uses_s(model.shape) && is_random(model.s));
  const std::size_t attempts = random ? max_attempts : 1;
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    spec.q = uses_q(model.shape) ? draw_crisp(model.q, rng) : 0.0;
    spec.p = uses_p(model.shape) ? draw_crisp(model.p, rng) : 0.0;
    spec.s = uses_s(model.shape) ? draw_crisp(model.s, rng) : 0.0;
    const bool ordered = !(uses_q(model.shape) && uses_p(model.shape)) || spec.q <= spec.p;
    const bool positive_spread = !uses_s(model.shape) || spec.s > 0.0;
    if (spec.q >= 0.0 && spec.p >= 0.0 && ordered && positive_spread) return spec;
  }
  throw Error(ErrorCode::Infeasible,
              fmt::format("no {} thresholds with 0 <= q <= p after {} attempts", to_string(model.shape), attempts));
}

ProfileSet sample_profiles(std::span<const std::vector<StochasticValue>> profiles,
                           std::span<const PreferenceSpec> preferences, Rng& rng, std::size_t max_attempts) {
  if (profiles.size() != preferences.size()) {
    throw Error(ErrorCode::Dimension,
                fmt::format("{} profile columns for {} criteria", profiles.size(), preferences.size()));
  }
  ProfileSet out;
  out.by_criterion.resize(profiles.size());
  for (std::size_t t = 0; t < profiles.size(); ++t) {
    const auto& spec = profiles[t];
    auto& column = out.by_criterion[t];
    column.resize(spec.size());
    const bool random = std::any_of(spec.begin(), spec.end(), [](const auto& v) { return is_random(v); });
    const std::size_t attempts = random ? max_attempts : 1;
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < attempts && !accepted; ++attempt) {
      for (std::size_t h = 0; h < spec.size(); ++h) column[h] = sample_value(spec[h], rng);
      accepted = true;
      for (std::size_t h = 0; h + 1 < column.size() && accepted; ++h) {
        accepted = dominates(column[h], column[h + 1], preferences[t].direction);
      }
    }
    if (!accepted) {
      throw Error(random ? ErrorCode::Infeasible : ErrorCode::ProfileDominance,
                  fmt::format("limiting profiles of criterion {} violate dominance after {} attempts", t + 1,
                              attempts));
    }
  }
  return out;
}

Tfn central_value(const StochasticValue& value) {
  if (const auto* crisp = std::get_if<CrispValue>(&value)) return Tfn::crisp(crisp->value);
  if (const auto* fuzzy = std::get_if<FuzzyValue>(&value)) return fuzzy->value;
  if (const auto* interval = std::get_if<IntervalValue>(&value)) {
    return Tfn::crisp(0.5 * (interval->lower + interval->upper));
  }
  const auto& dist = std::get<DistributionValue>(value);
  const auto& p = dist.params;
  double mean = 0.0;
  switch (dist.family) {
    case Family::Normal: mean = p[0]; break;
    case Family::Uniform: mean = 0.5 * (p[0] + p[1]); break;
    case Family::Triangular: mean = (p[0] + p[1] + p[2]) / 3.0; break;
    case Family::LogNormal: mean = std::exp(p[0] + 0.5 * p[1] * p[1]); break;
  }
  if (dist.bounds) mean = std::clamp(mean, dist.bounds->lower, dist.bounds->upper);
  return Tfn::crisp(mean);
}

std::vector<double> central_weights(const WeightSpec& spec, std::size_t n) {
  switch (spec.kind) {
    case WeightKind::Deterministic:
      return spec.values;
    case WeightKind::Missing:
      return std::vector<double>(n, 1.0 / static_cast<double>(n));
    case WeightKind::Ordinal: {
      // The j-th largest of m ranked components of a uniform simplex point in
      // n dimensions has mean (1/n) * sum_{i=j}^{m} 1/i; unranked ones have 1/n.
      const auto m = static_cast<std::size_t>(
          std::count_if(spec.ranks.begin(), spec.ranks.end(), [](const auto& r) { return r.has_value(); }));
      std::vector<double> sorted_means(m, 0.0);
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = j + 1; i <= m; ++i) sorted_means[j] += 1.0 / static_cast<double>(i);
        sorted_means[j] /= static_cast<double>(n);
      }
      std::vector<double> point(n, 1.0 / static_cast<double>(n));
      std::size_t next = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (spec.ranks[i]) point[i] = sorted_means[next++];
      }
      return ordinal_from_simplex(spec.ranks, std::move(point));
    }
    case WeightKind::Interval: {
      std::vector<double> w(n);
      for (std::size_t j = 0; j < n; ++j) w[j] = 0.5 * (spec.bounds[j].lower + spec.bounds[j].upper);
      const double sum = std::accumulate(w.begin(), w.end(), 0.0);
      for (auto& x : w) x /= sum;
      for (std::size_t j = 0; j < n; ++j) {
        if (w[j] < spec.bounds[j].lower - 1e-12 || w[j] > spec.bounds[j].upper + 1e-12) {
          throw Error(ErrorCode::Infeasible, "normalized interval midpoints leave the weight bounds");
        }
      }
      return w;
    }
  }
  return {};
}

Scenario sample_scenario(const Problem& problem, Rng& rng, std::size_t max_attempts) {
  Scenario scenario;
  scenario.weights = sample_weight_assignment(problem.tree, rng, max_attempts);
  scenario.preferences.reserve(problem.preferences.size());
  for (const auto& model : problem.preferences) {
    scenario.preferences.push_back(sample_preference(model, rng, max_attempts));
  }
  scenario.profiles = sample_profiles(problem.profiles, scenario.preferences, rng, max_attempts);

  const std::size_t leaves = problem.tree.leaf_count();
  std::vector<ValueBounds> bounds;
  bounds.reserve(leaves);
  for (std::size_t t = 0; t < leaves; ++t) {
    bounds.push_back(evaluation_bounds(scenario.profiles.by_criterion[t], scenario.preferences[t].direction));
  }
  scenario.evaluations.reserve(problem.alternatives.size());
  for (const auto& alternative : problem.alternatives) {
    Evaluation row(leaves);
    for (std::size_t t = 0; t < leaves; ++t) {
      row[t] = sample_value(alternative.values[t], rng, bounds[t], max_attempts);
      if (!bounds[t].contains(row[t])) {
        throw Error(ErrorCode::EvaluationBounds,
                    fmt::format("value [{}, {}] lies outside the sampled profile range [{}, {}]", row[t].lower(),
                                row[t].upper(), bounds[t].lower, bounds[t].upper),
                    fmt::format("alternatives[{}] criterion {}", alternative.name,
                                format_path(problem.tree.node(problem.tree.elementary()[t]).path)));
      }
    }
    scenario.evaluations.push_back(std::move(row));
  }
  return scenario;
}

Scenario central_scenario(const Problem& problem) {
  Scenario scenario;
  const auto& tree = problem.tree;
  scenario.weights.assign(tree.size(), 1.0);
  for (const auto& node : tree.nodes()) {
    if (node.elementary()) continue;
    const auto group = central_weights(node.child_weights, node.children.size());
    for (std::size_t s = 0; s < node.children.size(); ++s) {
      scenario.weights[static_cast<std::size_t>(node.children[s])] = group[s];
    }
  }
  for (const auto& model : problem.preferences) {
    PreferenceSpec spec;
    spec.shape = model.shape;
    spec.direction = model.direction;
    spec.q = uses_q(model.shape) ? central_value(model.q).mode : 0.0;
    spec.p = uses_p(model.shape) ? central_value(model.p).mode : 0.0;
    spec.s = uses_s(model.shape) ? central_value(model.s).mode : 0.0;
    validate(spec);
    scenario.preferences.push_back(spec);
  }
  scenario.profiles.by_criterion.resize(problem.profiles.size());
  for (std::size_t t = 0; t < problem.profiles.size(); ++t) {
    for (const auto& v : problem.profiles[t]) scenario.profiles.by_criterion[t].push_back(central_value(v));
  }
  validate_profiles(tree, scenario.preferences, scenario.profiles);
  for (const auto& alternative : problem.alternatives) {
    Evaluation row;
    for (const auto& v : alternative.values) row.push_back(central_value(v));
    validate_evaluation(tree, scenario.preferences, scenario.profiles, row);
    scenario.evaluations.push_back(std::move(row));
  }
  return scenario;
}

SmaaOptions SmaaOptions::from(const SmaaSettings& settings) {
  SmaaOptions options;
  options.iterations = settings.iterations;
  options.seed = settings.seed;
  options.rule = settings.rule;
  options.defuzz = settings.defuzz;
  options.max_attempts = settings.max_attempts;
  return options;
}

namespace {

void tally(const Problem& problem, const Scenario& scenario, const SmaaOptions& options, Counts& counts) {
  const std::size_t m = problem.alternatives.size();
  const std::size_t k = problem.category_count();
  const FlowSortH engine(problem.tree, scenario.weights, scenario.preferences, scenario.profiles, options.defuzz);
  const auto policy = options.strict ? BoundaryPolicy::Throw : BoundaryPolicy::Clamp;
  for (std::size_t i = 0; i < m; ++i) {
    const FlowBundle bundle = engine.flows(scenario.evaluations[i]);
    bool clamped = false;
    const std::size_t overall = assign(bundle.overall(), options.rule, policy, &clamped);
    counts.boundary += clamped ? 1 : 0;
    ++counts.category[i * k + overall];
    for (std::size_t r = 0; r < bundle.nodes.size(); ++r) {
      const std::size_t h = assign(bundle.nodes[r], Rule::Net, policy, &clamped);
      counts.boundary += clamped ? 1 : 0;
      ++counts.by_node[(r * m + i) * k + h];
    }
  }
}

AcceptabilityResult finish(const Problem& problem, const Counts& counts, std::size_t iterations) {
  const std::size_t m = problem.alternatives.size();
  const std::size_t k = problem.category_count();
  const double n = static_cast<double>(iterations);
  AcceptabilityResult result;
  result.category.assign(m, std::vector<double>(k, 0.0));
  result.by_node.assign(problem.tree.size(), AcceptabilityMatrix(m, std::vector<double>(k, 0.0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t h = 0; h < k; ++h) {
      result.category[i][h] = static_cast<double>(counts.category[i * k + h]) / n;
      for (std::size_t r = 0; r < problem.tree.size(); ++r) {
        result.by_node[r][i][h] = static_cast<double>(counts.by_node[(r * m + i) * k + h]) / n;
      }
    }
  }
  result.iterations = iterations;
  result.boundary_violations = counts.boundary;
  return result;
}

Counts empty_counts(const Problem& problem) {
  const std::size_t cells = problem.alternatives.size() * problem.category_count();
  return Counts{std::vector<std::size_t>(cells, 0), std::vector<std::size_t>(cells * problem.tree.size(), 0), 0};
}

}  // namespace

AcceptabilityResult run_smaa(const Problem& problem, const SmaaOptions& options) {
  if (options.iterations < 1) throw Error(ErrorCode::InvalidArgument, "iterations must be at least 1");
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, options.iterations));

  std::vector<Counts> partial(threads, empty_counts(problem));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned worker) {
    const std::size_t begin = options.iterations * worker / threads;
    const std::size_t end = options.iterations * (worker + 1) / threads;
    try {
      for (std::size_t it = begin; it < end; ++it) {
        Rng rng = iteration_rng(options.seed, it);
        const Scenario scenario = sample_scenario(problem, rng, options.max_attempts);
        tally(problem, scenario, options, partial[worker]);
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  // Blocks are contiguous, so the first failing block holds the earliest failure.
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  Counts total = empty_counts(problem);
  for (const auto& c : partial) {
    std::transform(total.category.begin(), total.category.end(), c.category.begin(), total.category.begin(),
                   std::plus<>());
    std::transform(total.by_node.begin(), total.by_node.end(), c.by_node.begin(), total.by_node.begin(),
                   std::plus<>());
    total.boundary += c.boundary;
  }
  AcceptabilityResult result = finish(problem, total, options.iterations);
  result.seed = options.seed;
  result.rule = options.rule;
  return result;
}

AcceptabilityResult run_deterministic(const Problem& problem, const SmaaOptions& options) {
  Counts counts = empty_counts(problem);
  tally(problem, central_scenario(problem), options, counts);
  AcceptabilityResult result = finish(problem, counts, 1);
  result.seed = options.seed;
  result.rule = options.rule;
  result.deterministic = true;
  return result;
}

}  // namespace smaaffsh
