#include "smaaffsh/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace smaaffsh {

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string assignment_cell(std::span<const double> row, const Problem& problem, double threshold) {
  const std::size_t h = final_assignment(row);
  std::string cell = problem.categories[h];
  if (row[h] < threshold) cell += "*";
  return cell;
}

bool any_below(const AcceptabilityMatrix& matrix, double threshold) {
  return std::any_of(matrix.begin(), matrix.end(), [&](const auto& row) { return row[final_assignment(row)] < threshold; });
}

std::string threshold_note(double threshold) {
  return fmt::format("* largest acceptability below the {:g}% threshold\n", threshold * 100.0);
}

/// Nodes reported at a level, as indices into the tree; 0 stands for the overall row.
std::vector<int> reported_nodes(const Problem& problem, ReportLevel level) {
  std::vector<int> nodes{0};
  if (level == ReportLevel::Category) return nodes;
  for (std::size_t r = 1; r < problem.tree.size(); ++r) {
    if (level == ReportLevel::AllNodes || problem.tree.node(static_cast<int>(r)).level() == 1) {
      nodes.push_back(static_cast<int>(r));
    }
  }
  return nodes;
}

std::string delimited(const AcceptabilityResult& result, const Problem& problem, ReportLevel level,
                      double threshold) {
  std::string out = "alternative,node,label";
  for (const auto& c : problem.categories) out += "," + csv_field(c);
  out += ",final_assignment,meets_threshold\n";
  const auto nodes = reported_nodes(problem, level);
  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    for (int r : nodes) {
      const auto& row = r == 0 ? result.category[i] : result.by_node[static_cast<std::size_t>(r)][i];
      const auto& node = problem.tree.node(r);
      out += csv_field(problem.alternatives[i].name);
      out += r == 0 ? ",overall," : fmt::format(",{},{}", format_path(node.path), csv_field(node.label));
      for (double v : row) out += fmt::format(",{}", v);
      const std::size_t h = final_assignment(row);
      out += fmt::format(",{},{}\n", csv_field(problem.categories[h]), row[h] >= threshold ? "yes" : "no");
    }
  }
  return out;
}

std::string header(const AcceptabilityResult& result, const Problem& problem, std::string_view title) {
  std::string line = fmt::format("{}\n", title);
  if (!problem.name.empty()) line += fmt::format("Problem: {}\n", problem.name);
  if (result.deterministic) {
    line += "Run: deterministic (central values)\n";
  } else {
    line += fmt::format("Run: {} iterations, seed {}, {} rule\n", result.iterations, result.seed,
                        to_string(result.rule));
  }
  if (result.boundary_violations > 0) {
    line += fmt::format("Boundary violations clamped: {}\n", result.boundary_violations);
  }
  return line + "\n";
}

std::string category_table(const AcceptabilityResult& result, const Problem& problem, double threshold) {
  std::size_t name_width = std::string_view("Alternative").size();
  for (const auto& a : problem.alternatives) name_width = std::max(name_width, a.name.size());
  std::size_t cell = 4;
  for (const auto& c : problem.categories) cell = std::max(cell, c.size() + 1);

  std::string out = header(result, problem, "Category acceptability index (%)");
  out += fmt::format("{:<{}}", "Alternative", name_width);
  for (const auto& c : problem.categories) out += fmt::format(" {:>{}}", c, cell);
  out += "  Final assignment\n";
  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    out += fmt::format("{:<{}}", problem.alternatives[i].name, name_width);
    for (int p : display_percentages(result.category[i])) out += fmt::format(" {:>{}}", p, cell);
    out += fmt::format("  {}\n", assignment_cell(result.category[i], problem, threshold));
  }
  if (any_below(result.category, threshold)) out += "\n" + threshold_note(threshold);
  return out;
}

std::string first_level_table(const AcceptabilityResult& result, const Problem& problem, double threshold) {
  const auto& tree = problem.tree;
  const auto criteria = tree.first_level();
  std::size_t label_width = std::string_view("Criterion").size();
  for (int r : criteria) label_width = std::max(label_width, tree.node(r).label.size());
  std::vector<std::size_t> widths;
  for (const auto& a : problem.alternatives) {
    std::size_t w = a.name.size();
    for (const auto& c : problem.categories) w = std::max(w, c.size() + 1);
    widths.push_back(w);
  }

  std::string out = header(result, problem, "Final assignment by first-level single-criterion flows");
  out += fmt::format("{:<{}}", "Criterion", label_width);
  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    out += fmt::format("  {:<{}}", problem.alternatives[i].name, widths[i]);
  }
  while (out.back() == ' ') out.pop_back();
  out += "\n";
  bool starred = false;
  for (int r : criteria) {
    const auto& matrix = result.by_node[static_cast<std::size_t>(r)];
    out += fmt::format("{:<{}}", tree.node(r).label, label_width);
    for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
      out += fmt::format("  {:<{}}", assignment_cell(matrix[i], problem, threshold), widths[i]);
    }
    while (out.back() == ' ') out.pop_back();
    out += "\n";
    starred = starred || any_below(matrix, threshold);
  }
  if (starred) out += "\n" + threshold_note(threshold);
  return out;
}

std::string all_nodes_blocks(const AcceptabilityResult& result, const Problem& problem, double threshold) {
  const auto& tree = problem.tree;
  std::size_t width = std::string_view("Criterion").size();
  for (std::size_t r = 1; r < tree.size(); ++r) {
    const auto& node = tree.node(static_cast<int>(r));
    const std::size_t indent = 4 * (node.level() - 1);
    const std::size_t prefix = node.level() > 1 ? fmt::format("L{} - ", node.level()).size() : 0;
    width = std::max(width, indent + prefix + node.label.size());
  }

  std::string out = header(result, problem, "Final assignment by single-criterion flows at every level");
  bool starred = false;
  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    out += fmt::format("== {} ==\n", problem.alternatives[i].name);
    out += fmt::format("{:<{}}  Final assignment\n", "Criterion", width);
    for (std::size_t r = 1; r < tree.size(); ++r) {
      const auto& node = tree.node(static_cast<int>(r));
      const auto& row = result.by_node[r][i];
      std::string label = node.level() == 1
                              ? node.label
                              : fmt::format("{}L{} - {}", std::string(4 * (node.level() - 1), ' '), node.level(),
                                            node.label);
      if (node.level() == 1 && r > 1) out += "\n";
      out += fmt::format("{:<{}}  {}\n", label, width, assignment_cell(row, problem, threshold));
      starred = starred || row[final_assignment(row)] < threshold;
    }
    out += "\n";
  }
  if (starred) out += threshold_note(threshold);
  return out;
}

}  // namespace

std::string_view to_string(ReportLevel level) {
  switch (level) {
    case ReportLevel::Category: return "category";
    case ReportLevel::FirstLevel: return "first-level";
    case ReportLevel::AllNodes: return "all-nodes";
  }
  return "category";
}

std::optional<ReportLevel> parse_report_level(std::string_view name) {
  for (auto level : {ReportLevel::Category, ReportLevel::FirstLevel, ReportLevel::AllNodes}) {
    if (to_string(level) == name) return level;
  }
  return std::nullopt;
}

std::vector<int> display_percentages(std::span<const double> row) {
  std::vector<int> out(row.size());
  std::vector<double> remainder(row.size());
  int total = 0;
  for (std::size_t h = 0; h < row.size(); ++h) {
    const double scaled = row[h] * 100.0;
    out[h] = static_cast<int>(std::floor(scaled + 1e-9));
    remainder[h] = scaled - out[h];
    total += out[h];
  }
  std::vector<std::size_t> order(row.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t j = 0; total < 100 && j < order.size(); ++j, ++total) ++out[order[j]];
  return out;
}

std::size_t final_assignment(std::span<const double> row) {
  return static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
}

std::string write_report(const AcceptabilityResult& result, const Problem& problem, ReportLevel level,
                         ReportFormat format, double threshold) {
  if (format == ReportFormat::Delimited) return delimited(result, problem, level, threshold);
  switch (level) {
    case ReportLevel::Category: return category_table(result, problem, threshold);
    case ReportLevel::FirstLevel: return first_level_table(result, problem, threshold);
    case ReportLevel::AllNodes: return all_nodes_blocks(result, problem, threshold);
  }
  return {};
}

std::string summary(const AcceptabilityResult& result, const Problem& problem, double threshold) {
  std::string out;
  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    const auto& row = result.category[i];
    const std::size_t h = final_assignment(row);
    out += fmt::format("{}: {}% {}{}\n", problem.alternatives[i].name, display_percentages(row)[h],
                       problem.categories[h], row[h] < threshold ? " (below threshold)" : "");
  }
  return out;
}

}  // namespace smaaffsh
