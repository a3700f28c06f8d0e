#include "smaaffsh/problem.hpp"

#include "smaaffsh/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>

namespace smaaffsh {

const LinguisticTerm* LinguisticScale::find(std::string_view term) const {
  for (const auto& t : terms) {
    if (t.name == term || (!t.abbrev.empty() && t.abbrev == term)) return &t;
  }
  return nullptr;
}

void validate_scale(const LinguisticScale& scale) {
  const std::string where = fmt::format("scales.{}", scale.name);
  if (scale.terms.empty()) throw Error(ErrorCode::Scale, "scale has no terms", where);
  std::set<std::string> seen;
  for (const auto& t : scale.terms) {
    if (t.name.empty()) throw Error(ErrorCode::Scale, "term without a name", where);
    for (const auto& key : {t.name, t.abbrev}) {
      if (!key.empty() && !seen.insert(key).second) {
        throw Error(ErrorCode::Scale, fmt::format("term '{}' appears twice", key), where);
      }
    }
    if (t.value.left < 0.0 || t.value.right < 0.0) {
      throw Error(ErrorCode::Scale, fmt::format("term '{}' has a negative spread", t.name), where);
    }
  }
  if (scale.terms.size() < 2) return;
  const bool descending = scale.terms[0].value.mode > scale.terms[1].value.mode;
  for (std::size_t i = 0; i + 1 < scale.terms.size(); ++i) {
    const double a = scale.terms[i].value.mode;
    const double b = scale.terms[i + 1].value.mode;
    if (descending ? !(a > b) : !(a < b)) {
      throw Error(ErrorCode::Scale,
                  fmt::format("modes of '{}' and '{}' break the strict order of the scale", scale.terms[i].name,
                              scale.terms[i + 1].name),
                  where);
    }
  }
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Normal: return "normal";
    case Family::Uniform: return "uniform";
    case Family::Triangular: return "triangular";
    case Family::LogNormal: return "lognormal";
  }
  return "normal";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto f : {Family::Normal, Family::Uniform, Family::Triangular, Family::LogNormal}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::size_t parameter_count(Family family) { return family == Family::Triangular ? 3 : 2; }

bool is_random(const StochasticValue& value) {
  return std::holds_alternative<IntervalValue>(value) || std::holds_alternative<DistributionValue>(value);
}

void validate_value(const StochasticValue& value) {
  if (const auto* interval = std::get_if<IntervalValue>(&value)) {
    if (!(interval->lower <= interval->upper)) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("interval [{}, {}] has lower > upper", interval->lower, interval->upper));
    }
    return;
  }
  if (const auto* fuzzy = std::get_if<FuzzyValue>(&value)) {
    if (fuzzy->value.left < 0.0 || fuzzy->value.right < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "triangular number with a negative spread");
    }
    return;
  }
  const auto* dist = std::get_if<DistributionValue>(&value);
  if (!dist) return;
  const auto& p = dist->params;
  if (p.size() != parameter_count(dist->family)) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("{} distribution takes {} parameters, got {}",
                                                        to_string(dist->family), parameter_count(dist->family),
                                                        p.size()));
  }
  bool ok = true;
  switch (dist->family) {
    case Family::Normal:
    case Family::LogNormal: ok = p[1] > 0.0; break;
    case Family::Uniform: ok = p[0] < p[1]; break;
    case Family::Triangular: ok = p[0] <= p[1] && p[1] <= p[2] && p[0] < p[2]; break;
  }
  if (!ok) throw Error(ErrorCode::InvalidArgument, fmt::format("invalid {} parameters", to_string(dist->family)));
  if (dist->bounds && !(dist->bounds->lower <= dist->bounds->upper)) {
    throw Error(ErrorCode::InvalidArgument, "distribution bounds have lower > upper");
  }
}

bool is_zero_variance(const Problem& problem) {
  for (const auto& node : problem.tree.nodes()) {
    if (!node.elementary() && !node.child_weights.is_fixed()) return false;
  }
  for (const auto& model : problem.preferences) {
    if ((uses_q(model.shape) && is_random(model.q)) || (uses_p(model.shape) && is_random(model.p)) ||
        (uses_s(model.shape) && is_random(model.s))) {
      return false;
    }
  }
  for (const auto& column : problem.profiles) {
    if (std::any_of(column.begin(), column.end(), [](const auto& v) { return is_random(v); })) return false;
  }
  for (const auto& alternative : problem.alternatives) {
    if (std::any_of(alternative.values.begin(), alternative.values.end(),
                    [](const auto& v) { return is_random(v); })) {
      return false;
    }
  }
  return true;
}

}  // namespace smaaffsh
