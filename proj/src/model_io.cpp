#include "smaaffsh/model_io.hpp"

#include "smaaffsh/error.hpp"

#include <fmt/format.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace smaaffsh {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& message) {
  throw Error(ErrorCode::Schema, message, where);
}

std::string member(const std::string& where, std::string_view key) {
  return where.empty() ? std::string(key) : fmt::format("{}.{}", where, key);
}

std::string element(const std::string& where, std::size_t index) { return fmt::format("{}[{}]", where, index); }

void expect_keys(const Json& object, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      schema_error(member(where, key), "unknown field");
    }
  }
}

const Json& require(const Json& object, std::string_view key, const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) schema_error(member(where, key), "required field is missing");
  return *it;
}

double number(const Json& value, const std::string& where) {
  if (!value.is_number()) schema_error(where, "expected a number");
  return value.get<double>();
}

std::string text(const Json& value, const std::string& where) {
  if (!value.is_string()) schema_error(where, "expected a string");
  return value.get<std::string>();
}

std::uint64_t unsigned_integer(const Json& value, const std::string& where) {
  if (!value.is_number_unsigned()) schema_error(where, "expected a non-negative integer");
  return value.get<std::uint64_t>();
}

const Json& array(const Json& value, const std::string& where) {
  if (!value.is_array()) schema_error(where, "expected an array");
  return value;
}

Tfn parse_tfn(const Json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 3) schema_error(where, "expected [mode, left spread, right spread]");
  Tfn t{number(value[0], element(where, 0)), number(value[1], element(where, 1)), number(value[2], element(where, 2))};
  if (t.left < 0.0 || t.right < 0.0) throw Error(ErrorCode::Scale, "spreads must be non-negative", where);
  return t;
}

// ---- scales -------------------------------------------------------------------

std::vector<LinguisticScale> parse_scales(const Json& doc) {
  std::vector<LinguisticScale> scales;
  const auto it = doc.find("scales");
  if (it == doc.end()) return scales;
  if (!it->is_object()) schema_error("scales", "expected an object of named scales");
  for (const auto& [name, terms] : it->items()) {
    const std::string where = member("scales", name);
    LinguisticScale scale;
    scale.name = name;
    if (name.find(':') != std::string::npos) schema_error(where, "scale names may not contain ':'");
    array(terms, where);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string at = element(where, i);
      expect_keys(terms[i], at, {"term", "abbrev", "tfn"});
      LinguisticTerm term;
      term.name = text(require(terms[i], "term", at), member(at, "term"));
      if (terms[i].contains("abbrev")) term.abbrev = text(terms[i]["abbrev"], member(at, "abbrev"));
      term.value = parse_tfn(require(terms[i], "tfn", at), member(at, "tfn"));
      scale.terms.push_back(std::move(term));
    }
    validate_scale(scale);
    scales.push_back(std::move(scale));
  }
  return scales;
}

// ---- values ---------------------------------------------------------------------

FuzzyValue resolve_term(const std::vector<LinguisticScale>& scales, const std::string& reference,
                        const std::string& where) {
  const auto colon = reference.find(':');
  if (colon != std::string::npos) {
    const std::string scale_name = reference.substr(0, colon);
    const std::string term_name = reference.substr(colon + 1);
    for (const auto& scale : scales) {
      if (scale.name != scale_name) continue;
      if (const auto* term = scale.find(term_name)) return FuzzyValue{scale.name, term->name, term->value};
      throw Error(ErrorCode::UnknownTerm, fmt::format("scale '{}' has no term '{}'", scale_name, term_name), where);
    }
    throw Error(ErrorCode::UnknownTerm, fmt::format("no scale named '{}'", scale_name), where);
  }
  const FuzzyValue* found = nullptr;
  FuzzyValue match;
  for (const auto& scale : scales) {
    if (const auto* term = scale.find(reference)) {
      if (found) {
        throw Error(ErrorCode::UnknownTerm,
                    fmt::format("term '{}' is ambiguous; qualify it as 'scale:term'", reference), where);
      }
      match = FuzzyValue{scale.name, term->name, term->value};
      found = &match;
    }
  }
  if (!found) throw Error(ErrorCode::UnknownTerm, fmt::format("unknown term '{}'", reference), where);
  return match;
}

StochasticValue parse_value(const Json& value, const std::vector<LinguisticScale>& scales, const std::string& where,
                            bool allow_fuzzy = true) {
  StochasticValue out;
  if (value.is_number()) {
    out = CrispValue{value.get<double>()};
  } else if (value.is_array()) {
    if (value.size() != 2) schema_error(where, "an interval is written [lower, upper]");
    out = IntervalValue{number(value[0], element(where, 0)), number(value[1], element(where, 1))};
  } else if (value.is_string()) {
    if (!allow_fuzzy) schema_error(where, "linguistic terms are not allowed here");
    out = resolve_term(scales, value.get<std::string>(), where);
  } else if (value.is_object() && value.contains("tfn")) {
    if (!allow_fuzzy) schema_error(where, "fuzzy numbers are not allowed here");
    expect_keys(value, where, {"tfn"});
    out = FuzzyValue{"", "", parse_tfn(value["tfn"], member(where, "tfn"))};
  } else if (value.is_object() && value.contains("distribution")) {
    expect_keys(value, where, {"distribution", "params", "bounds"});
    const std::string family = text(value["distribution"], member(where, "distribution"));
    DistributionValue dist;
    const auto parsed = parse_family(family);
    if (!parsed) schema_error(member(where, "distribution"), fmt::format("unknown distribution '{}'", family));
    dist.family = *parsed;
    const auto& params = array(require(value, "params", where), member(where, "params"));
    for (std::size_t i = 0; i < params.size(); ++i) {
      dist.params.push_back(number(params[i], element(member(where, "params"), i)));
    }
    if (value.contains("bounds")) {
      const auto& b = value["bounds"];
      const std::string at = member(where, "bounds");
      if (!b.is_array() || b.size() != 2) schema_error(at, "bounds are written [lower, upper]");
      dist.bounds = ValueBounds{number(b[0], element(at, 0)), number(b[1], element(at, 1))};
    }
    out = dist;
  } else {
    schema_error(where, "expected a number, [lower, upper], a term, {\"tfn\"} or {\"distribution\"}");
  }
  try {
    validate_value(out);
  } catch (const Error& e) {
    throw Error(ErrorCode::Schema, e.what(), where);
  }
  return out;
}

// ---- tree -------------------------------------------------------------------------

WeightSpec parse_weights(const Json& value, const std::string& where) {
  expect_keys(value, where, {"kind", "values", "ranks", "bounds"});
  const std::string kind = text(require(value, "kind", where), member(where, "kind"));
  if (kind == "deterministic") {
    std::vector<double> values;
    const auto& list = array(require(value, "values", where), member(where, "values"));
    for (std::size_t i = 0; i < list.size(); ++i) values.push_back(number(list[i], element(member(where, "values"), i)));
    return WeightSpec::deterministic(std::move(values));
  }
  if (kind == "ordinal") {
    std::vector<std::optional<int>> ranks;
    const auto& list = array(require(value, "ranks", where), member(where, "ranks"));
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].is_null()) {
        ranks.emplace_back();
      } else if (list[i].is_number_integer()) {
        ranks.emplace_back(list[i].get<int>());
      } else {
        throw Error(ErrorCode::WeightSpec, "a rank is a positive integer or null",
                    element(member(where, "ranks"), i));
      }
    }
    return WeightSpec::ordinal(std::move(ranks));
  }
  if (kind == "interval") {
    std::vector<WeightBounds> bounds;
    const auto& list = array(require(value, "bounds", where), member(where, "bounds"));
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = element(member(where, "bounds"), i);
      if (!list[i].is_array() || list[i].size() != 2) schema_error(at, "expected [lower, upper]");
      bounds.push_back({number(list[i][0], element(at, 0)), number(list[i][1], element(at, 1))});
    }
    return WeightSpec::interval(std::move(bounds));
  }
  if (kind == "missing") return WeightSpec::missing();
  schema_error(member(where, "kind"), fmt::format("unknown weight kind '{}'", kind));
}

TreeSpec parse_tree_node(const Json& value, const std::string& where, bool root) {
  expect_keys(value, where, {"label", "weights", "children"});
  TreeSpec spec;
  if (!root) spec.label = text(require(value, "label", where), member(where, "label"));
  if (value.contains("children")) {
    const auto& children = array(value["children"], member(where, "children"));
    for (std::size_t i = 0; i < children.size(); ++i) {
      spec.children.push_back(parse_tree_node(children[i], element(member(where, "children"), i), false));
    }
  }
  if (value.contains("weights")) {
    if (spec.children.empty()) schema_error(member(where, "weights"), "an elementary criterion has no sub-weights");
    spec.weights = parse_weights(value["weights"], member(where, "weights"));
  }
  return spec;
}

// ---- per-criterion sections ---------------------------------------------------------

/// Maps a per-criterion section (array aligned to the elementary order, or
/// {"default", "criteria": {path: entry}}) to one JSON entry per leaf.
std::vector<std::pair<const Json*, std::string>> per_criterion(const Json& section, const CriteriaTree& tree,
                                                               const std::string& where) {
  const std::size_t n = tree.leaf_count();
  std::vector<std::pair<const Json*, std::string>> out(n, {nullptr, ""});
  const auto paths = tree.elementary_indices();
  if (section.is_array()) {
    if (section.size() != n) {
      schema_error(where, fmt::format("{} entries for {} elementary criteria", section.size(), n));
    }
    for (std::size_t t = 0; t < n; ++t) out[t] = {&section[t], element(where, t)};
    return out;
  }
  expect_keys(section, where, {"default", "criteria"});
  if (section.contains("default")) {
    for (std::size_t t = 0; t < n; ++t) out[t] = {&section["default"], member(where, "default")};
  }
  if (section.contains("criteria")) {
    const auto& criteria = section["criteria"];
    if (!criteria.is_object()) schema_error(member(where, "criteria"), "expected an object keyed by criterion path");
    for (const auto& [key, entry] : criteria.items()) {
      const std::string at = fmt::format("{}.criteria[{}]", where, key);
      const auto path = parse_path(key);
      const auto index = path ? tree.find(*path) : std::nullopt;
      if (!index || path->empty()) throw Error(ErrorCode::UnknownNode, fmt::format("no criterion '{}'", key), at);
      const int leaf = tree.node(*index).leaf;
      if (leaf < 0) throw Error(ErrorCode::UnknownNode, fmt::format("criterion '{}' is not elementary", key), at);
      out[static_cast<std::size_t>(leaf)] = {&entry, at};
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (!out[t].first) schema_error(where, fmt::format("no entry for criterion {}", format_path(paths[t])));
  }
  return out;
}

PreferenceModel parse_preference(const Json& value, const std::vector<LinguisticScale>& scales,
                                 const std::string& where) {
  expect_keys(value, where, {"type", "direction", "q", "p", "s"});
  PreferenceModel model;
  const std::string type = text(require(value, "type", where), member(where, "type"));
  const auto shape = parse_shape(type);
  if (!shape) schema_error(member(where, "type"), fmt::format("unknown preference type '{}'", type));
  model.shape = *shape;
  if (value.contains("direction")) {
    const std::string dir = text(value["direction"], member(where, "direction"));
    const auto direction = parse_direction(dir);
    if (!direction) schema_error(member(where, "direction"), fmt::format("unknown direction '{}'", dir));
    model.direction = *direction;
  }
  auto threshold = [&](std::string_view key, bool used) -> StochasticValue {
    if (!value.contains(key)) {
      if (used) throw Error(ErrorCode::Threshold, fmt::format("{} requires '{}'", type, key), where);
      return CrispValue{0.0};
    }
    return parse_value(value[std::string(key)], scales, member(where, key), false);
  };
  model.q = threshold("q", uses_q(model.shape));
  model.p = threshold("p", uses_p(model.shape));
  model.s = threshold("s", uses_s(model.shape));

  const bool random = is_random(model.q) || is_random(model.p) || is_random(model.s);
  if (!random) {
    PreferenceSpec spec{model.shape, std::get<CrispValue>(model.q).value, std::get<CrispValue>(model.p).value,
                        std::get<CrispValue>(model.s).value, model.direction};
    try {
      validate(spec);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), where);
    }
  }
  return model;
}

Tfn fixed_value(const StochasticValue& value) {
  if (const auto* crisp = std::get_if<CrispValue>(&value)) return Tfn::crisp(crisp->value);
  return std::get<FuzzyValue>(value).value;
}

void check_profile_column(const std::vector<StochasticValue>& column, Direction direction, const std::string& where) {
  for (std::size_t h = 0; h + 1 < column.size(); ++h) {
    if (is_random(column[h]) || is_random(column[h + 1])) continue;
    const Tfn better = fixed_value(column[h]);
    const Tfn worse = fixed_value(column[h + 1]);
    if (dominates(better, worse, direction)) continue;
    const bool ordered = direction == Direction::Maximize ? better.mode > worse.mode : better.mode < worse.mode;
    if (ordered) {
      throw Error(ErrorCode::ProfileOverlap,
                  fmt::format("supports of r{} [{}, {}] and r{} [{}, {}] overlap", h + 1, better.lower(),
                              better.upper(), h + 2, worse.lower(), worse.upper()),
                  where);
    }
    throw Error(ErrorCode::ProfileDominance,
                fmt::format("r{} = {} does not dominate r{} = {}", h + 1, better.mode, h + 2, worse.mode), where);
  }
}

SmaaSettings parse_settings(const Json& doc) {
  SmaaSettings settings;
  const auto it = doc.find("smaa");
  if (it == doc.end()) return settings;
  const std::string where = "smaa";
  expect_keys(*it, where, {"iterations", "seed", "rule", "defuzz", "max_attempts", "threshold"});
  const Json& s = *it;
  if (s.contains("iterations")) {
    settings.iterations = unsigned_integer(s["iterations"], member(where, "iterations"));
    if (settings.iterations < 1) schema_error(member(where, "iterations"), "at least one iteration is required");
  }
  if (s.contains("seed")) settings.seed = unsigned_integer(s["seed"], member(where, "seed"));
  if (s.contains("rule")) {
    const std::string name = text(s["rule"], member(where, "rule"));
    const auto rule = parse_rule(name);
    if (!rule) schema_error(member(where, "rule"), fmt::format("unknown rule '{}'", name));
    settings.rule = *rule;
  }
  if (s.contains("defuzz")) {
    const std::string name = text(s["defuzz"], member(where, "defuzz"));
    const auto method = parse_defuzz_method(name);
    if (!method) schema_error(member(where, "defuzz"), fmt::format("unknown defuzzification '{}'", name));
    settings.defuzz = *method;
  }
  if (s.contains("max_attempts")) {
    settings.max_attempts = unsigned_integer(s["max_attempts"], member(where, "max_attempts"));
    if (settings.max_attempts < 1) schema_error(member(where, "max_attempts"), "must be at least 1");
  }
  if (s.contains("threshold")) {
    settings.threshold = number(s["threshold"], member(where, "threshold"));
    if (settings.threshold < 0.0 || settings.threshold > 1.0) {
      schema_error(member(where, "threshold"), "threshold must lie in [0, 1]");
    }
  }
  return settings;
}

// ---- writing ------------------------------------------------------------------------

Json value_to_json(const StochasticValue& value) {
  if (const auto* crisp = std::get_if<CrispValue>(&value)) return crisp->value;
  if (const auto* interval = std::get_if<IntervalValue>(&value)) return Json::array({interval->lower, interval->upper});
  if (const auto* fuzzy = std::get_if<FuzzyValue>(&value)) {
    if (!fuzzy->scale.empty()) return fmt::format("{}:{}", fuzzy->scale, fuzzy->term);
    return Json{{"tfn", Json::array({fuzzy->value.mode, fuzzy->value.left, fuzzy->value.right})}};
  }
  const auto& dist = std::get<DistributionValue>(value);
  Json out{{"distribution", std::string(to_string(dist.family))}, {"params", dist.params}};
  if (dist.bounds) out["bounds"] = Json::array({dist.bounds->lower, dist.bounds->upper});
  return out;
}

Json weights_to_json(const WeightSpec& spec) {
  Json out{{"kind", std::string(to_string(spec.kind))}};
  switch (spec.kind) {
    case WeightKind::Deterministic: out["values"] = spec.values; break;
    case WeightKind::Ordinal: {
      Json ranks = Json::array();
      for (const auto& r : spec.ranks) ranks.push_back(r ? Json(*r) : Json(nullptr));
      out["ranks"] = ranks;
      break;
    }
    case WeightKind::Interval: {
      Json bounds = Json::array();
      for (const auto& b : spec.bounds) bounds.push_back(Json::array({b.lower, b.upper}));
      out["bounds"] = bounds;
      break;
    }
    case WeightKind::Missing: break;
  }
  return out;
}

Json node_to_json(const CriteriaTree& tree, int index) {
  const auto& node = tree.node(index);
  Json out = Json::object();
  if (index != 0) out["label"] = node.label;
  if (!node.elementary()) {
    out["weights"] = weights_to_json(node.child_weights);
    Json children = Json::array();
    for (int child : node.children) children.push_back(node_to_json(tree, child));
    out["children"] = children;
  }
  return out;
}

}  // namespace

Problem parse_problem(const Json& doc) {
  expect_keys(doc, "", {"schema", "name", "categories", "scales", "tree", "preferences", "profiles", "alternatives",
                        "smaa"});
  const auto& version = require(doc, "schema", "");
  if (!version.is_number_integer() || version.get<int>() != 1) schema_error("schema", "unsupported schema version");

  Problem problem;
  if (doc.contains("name")) problem.name = text(doc["name"], "name");
  problem.scales = parse_scales(doc);
  problem.tree = CriteriaTree::build(parse_tree_node(require(doc, "tree", ""), "tree", true));
  const auto& tree = problem.tree;
  const std::size_t leaves = tree.leaf_count();

  for (const auto& [entry, where] : per_criterion(require(doc, "preferences", ""), tree, "preferences")) {
    problem.preferences.push_back(parse_preference(*entry, problem.scales, where));
  }

  std::size_t profile_count = 0;
  const auto profile_entries = per_criterion(require(doc, "profiles", ""), tree, "profiles");
  for (std::size_t t = 0; t < leaves; ++t) {
    const auto& [entry, where] = profile_entries[t];
    array(*entry, where);
    const std::string at = fmt::format("profiles[{}]", format_path(tree.node(tree.elementary()[t]).path));
    if (t == 0) profile_count = entry->size();
    if (entry->size() < 2) throw Error(ErrorCode::ProfileCount, "at least two limiting profiles are required", at);
    if (entry->size() != profile_count) {
      throw Error(ErrorCode::ProfileCount,
                  fmt::format("{} profiles on this criterion, expected {}", entry->size(), profile_count), at);
    }
    std::vector<StochasticValue> column;
    for (std::size_t h = 0; h < entry->size(); ++h) {
      column.push_back(parse_value((*entry)[h], problem.scales, element(where, h)));
    }
    check_profile_column(column, problem.preferences[t].direction, at);
    problem.profiles.push_back(std::move(column));
  }

  if (doc.contains("categories")) {
    const auto& list = array(doc["categories"], "categories");
    for (std::size_t h = 0; h < list.size(); ++h) problem.categories.push_back(text(list[h], element("categories", h)));
    if (problem.categories.size() + 1 != profile_count) {
      throw Error(ErrorCode::ProfileCount,
                  fmt::format("{} categories need {} limiting profiles, found {}", problem.categories.size(),
                              problem.categories.size() + 1, profile_count),
                  "categories");
    }
  } else {
    for (std::size_t h = 1; h < profile_count; ++h) problem.categories.push_back(fmt::format("C{}", h));
  }

  const auto paths = tree.elementary_indices();
  const auto& alternatives = array(require(doc, "alternatives", ""), "alternatives");
  if (alternatives.empty()) schema_error("alternatives", "at least one alternative is required");
  std::set<std::string> names;
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    const std::string where = element("alternatives", i);
    expect_keys(alternatives[i], where, {"name", "values"});
    Alternative alternative;
    alternative.name = text(require(alternatives[i], "name", where), member(where, "name"));
    if (!names.insert(alternative.name).second) {
      schema_error(member(where, "name"), fmt::format("duplicate alternative '{}'", alternative.name));
    }
    const auto& values = require(alternatives[i], "values", where);
    const std::string at = member(where, "values");
    if (values.is_array()) {
      if (values.size() != leaves) {
        throw Error(ErrorCode::MissingEvaluation,
                    fmt::format("{} values for {} elementary criteria", values.size(), leaves), at);
      }
      for (std::size_t t = 0; t < leaves; ++t) {
        alternative.values.push_back(parse_value(values[t], problem.scales, element(at, t)));
      }
    } else if (values.is_object()) {
      for (const auto& [key, v] : values.items()) {
        const auto path = parse_path(key);
        const auto index = path ? tree.find(*path) : std::nullopt;
        if (!index || path->empty() || tree.node(*index).leaf < 0) {
          throw Error(ErrorCode::UnknownNode, fmt::format("no elementary criterion '{}'", key), at);
        }
      }
      for (std::size_t t = 0; t < leaves; ++t) {
        const std::string key = format_path(paths[t]);
        if (!values.contains(key)) {
          throw Error(ErrorCode::MissingEvaluation, fmt::format("no value for criterion {}", key), at);
        }
        alternative.values.push_back(parse_value(values[key], problem.scales, fmt::format("{}[{}]", at, key)));
      }
    } else {
      schema_error(at, "expected an array or an object keyed by criterion path");
    }

    for (std::size_t t = 0; t < leaves; ++t) {
      const auto& column = problem.profiles[t];
      if (std::any_of(column.begin(), column.end(), [](const auto& v) { return is_random(v); })) continue;
      std::vector<Tfn> fixed;
      for (const auto& v : column) fixed.push_back(fixed_value(v));
      const auto bounds = evaluation_bounds(fixed, problem.preferences[t].direction);
      const auto& value = alternative.values[t];
      const std::string vat = fmt::format("{} criterion {}", at, format_path(paths[t]));
      if (const auto* interval = std::get_if<IntervalValue>(&value)) {
        if (interval->upper < bounds.lower || interval->lower > bounds.upper) {
          throw Error(ErrorCode::EvaluationBounds,
                      fmt::format("interval [{}, {}] misses the profile range [{}, {}]", interval->lower,
                                  interval->upper, bounds.lower, bounds.upper),
                      vat);
        }
      } else if (!is_random(value) && !bounds.contains(fixed_value(value))) {
        const Tfn v = fixed_value(value);
        throw Error(ErrorCode::EvaluationBounds,
                    fmt::format("value [{}, {}] lies outside the profile range [{}, {}]", v.lower(), v.upper(),
                                bounds.lower, bounds.upper),
                    vat);
      }
    }
    problem.alternatives.push_back(std::move(alternative));
  }

  problem.settings = parse_settings(doc);
  return problem;
}

Problem parse_problem_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Schema, fmt::format("malformed JSON: {}", e.what()));
  }
  return parse_problem(doc);
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open file", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "read failed", path.string());
  return parse_problem_text(buffer.str());
}

Json to_json(const Problem& problem) {
  const auto& tree = problem.tree;
  Json doc;
  doc["schema"] = 1;
  doc["name"] = problem.name;
  doc["categories"] = problem.categories;

  Json scales = Json::object();
  for (const auto& scale : problem.scales) {
    Json terms = Json::array();
    for (const auto& t : scale.terms) {
      Json term{{"term", t.name}};
      if (!t.abbrev.empty()) term["abbrev"] = t.abbrev;
      term["tfn"] = Json::array({t.value.mode, t.value.left, t.value.right});
      terms.push_back(term);
    }
    scales[scale.name] = terms;
  }
  doc["scales"] = scales;
  doc["tree"] = node_to_json(tree, 0);

  Json preferences = Json::array();
  for (const auto& model : problem.preferences) {
    Json entry{{"type", std::string(to_string(model.shape))}, {"direction", std::string(to_string(model.direction))}};
    if (uses_q(model.shape)) entry["q"] = value_to_json(model.q);
    if (uses_p(model.shape)) entry["p"] = value_to_json(model.p);
    if (uses_s(model.shape)) entry["s"] = value_to_json(model.s);
    preferences.push_back(entry);
  }
  doc["preferences"] = preferences;

  Json profiles = Json::array();
  for (const auto& column : problem.profiles) {
    Json values = Json::array();
    for (const auto& v : column) values.push_back(value_to_json(v));
    profiles.push_back(values);
  }
  doc["profiles"] = profiles;

  Json alternatives = Json::array();
  for (const auto& alternative : problem.alternatives) {
    Json values = Json::array();
    for (const auto& v : alternative.values) values.push_back(value_to_json(v));
    alternatives.push_back(Json{{"name", alternative.name}, {"values", values}});
  }
  doc["alternatives"] = alternatives;

  const auto& s = problem.settings;
  doc["smaa"] = Json{{"iterations", s.iterations},
                     {"seed", s.seed},
                     {"rule", std::string(to_string(s.rule))},
                     {"defuzz", std::string(to_string(s.defuzz))},
                     {"max_attempts", s.max_attempts},
                     {"threshold", s.threshold}};
  return doc;
}

std::string write_problem(const Problem& problem) { return to_json(problem).dump(2) + "\n"; }

}  // namespace smaaffsh
