#include "smaaffsh/reference_problems.hpp"
#include "smaaffsh/report.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace smaaffsh;

namespace {

AcceptabilityResult deterministic_worked_example(const Problem& problem) {
  return run_deterministic(problem, SmaaOptions::from(problem.settings));
}

}  // namespace

TEST(DisplayPercentages, LargestRemainderSumsToHundred) {
  EXPECT_EQ(display_percentages(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}), (std::vector<int>{34, 33, 33}));
  EXPECT_EQ(display_percentages(std::vector<double>{0.9, 0.1, 0.0, 0.0}), (std::vector<int>{90, 10, 0, 0}));
  EXPECT_EQ(display_percentages(std::vector<double>{0.6749, 0.3251}), (std::vector<int>{67, 33}));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> row(5);
    int counts[5] = {0, 0, 0, 0, 0};
    for (int n = 0; n < 997; ++n) ++counts[rng() % 5];
    for (int h = 0; h < 5; ++h) row[static_cast<std::size_t>(h)] = counts[h] / 997.0;
    const auto p = display_percentages(row);
    EXPECT_EQ(std::accumulate(p.begin(), p.end(), 0), 100);
  }
}

TEST(FinalAssignment, ArgmaxWithTiesToBetterCategory) {
  EXPECT_EQ(final_assignment(std::vector<double>{0.2, 0.5, 0.3}), 1u);
  EXPECT_EQ(final_assignment(std::vector<double>{0.0, 0.5, 0.5}), 1u);
}

TEST(Report, SummaryOfTheDeterministicWorkedExample) {
  const Problem problem = appendix_a_problem();
  const auto result = deterministic_worked_example(problem);
  EXPECT_EQ(summary(result, problem, 0.5), "x1: 100% C1\nx2: 100% C2\n");
}

TEST(Report, CategoryTextTable) {
  const Problem problem = appendix_a_problem();
  const auto text = write_report(deterministic_worked_example(problem), problem, ReportLevel::Category,
                                 ReportFormat::Text, 0.5);
  EXPECT_NE(text.find("Alternative   C1   C2  Final assignment\n"), std::string::npos) << text;
  EXPECT_NE(text.find("x1           100    0  C1\n"), std::string::npos) << text;
  EXPECT_NE(text.find("x2             0  100  C2\n"), std::string::npos) << text;
}

TEST(Report, DelimitedHasOneRowPerAlternativeAndNode) {
  const Problem problem = appendix_a_problem();
  const auto result = deterministic_worked_example(problem);
  const auto csv = write_report(result, problem, ReportLevel::AllNodes, ReportFormat::Delimited, 0.5);
  std::vector<std::string> lines;
  for (std::size_t pos = 0, next; (next = csv.find('\n', pos)) != std::string::npos; pos = next + 1) {
    lines.push_back(csv.substr(pos, next - pos));
  }
  ASSERT_EQ(lines.size(), 1u + 2u * problem.tree.size());
  EXPECT_EQ(lines[0], "alternative,node,label,C1,C2,final_assignment,meets_threshold");
  EXPECT_EQ(lines[1], "x1,overall,,1,0,C1,yes");
  EXPECT_EQ(lines[1 + problem.tree.size()], "x2,overall,,0,1,C2,yes");
  EXPECT_NE(csv.find("x2,1,g1,1,0,C1,yes"), std::string::npos);
  EXPECT_NE(csv.find("x2,2.1,g2.1,0,1,C2,yes"), std::string::npos);
}

TEST(Report, ThresholdIsAnnotated) {
  const Problem problem = appendix_a_problem();
  AcceptabilityResult result = deterministic_worked_example(problem);
  result.category[0] = {0.45, 0.55};
  result.category[1] = {0.4, 0.6};
  const auto text = write_report(result, problem, ReportLevel::Category, ReportFormat::Text, 0.58);
  EXPECT_NE(text.find("C2*"), std::string::npos);
  EXPECT_NE(text.find("below the 58% threshold"), std::string::npos);
  const auto csv = write_report(result, problem, ReportLevel::Category, ReportFormat::Delimited, 0.58);
  EXPECT_NE(csv.find("x1,overall,,0.45,0.55,C2,no"), std::string::npos) << csv;
  EXPECT_NE(csv.find("x2,overall,,0.4,0.6,C2,yes"), std::string::npos) << csv;
}

TEST(Report, FirstLevelTableListsCriteriaAgainstAlternatives) {
  const Problem problem = appendix_a_problem();
  const auto text = write_report(deterministic_worked_example(problem), problem, ReportLevel::FirstLevel,
                                 ReportFormat::Text, 0.5);
  EXPECT_NE(text.find("Criterion  x1   x2\n"), std::string::npos) << text;
  EXPECT_NE(text.find("g1         C1   C1\n"), std::string::npos) << text;
  EXPECT_NE(text.find("g2         C1   C2\n"), std::string::npos) << text;
}

TEST(Report, AllNodesBlocksIndentLowerLevels) {
  const Problem problem = appendix_a_problem();
  const auto text = write_report(deterministic_worked_example(problem), problem, ReportLevel::AllNodes,
                                 ReportFormat::Text, 0.5);
  EXPECT_NE(text.find("== x2 =="), std::string::npos);
  EXPECT_NE(text.find("    L2 - g2.1  C2\n"), std::string::npos) << text;
}

TEST(Report, LevelNames) {
  for (auto level : {ReportLevel::Category, ReportLevel::FirstLevel, ReportLevel::AllNodes}) {
    EXPECT_EQ(parse_report_level(to_string(level)), level);
  }
}
