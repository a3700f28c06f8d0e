#include "smaaffsh/cli.hpp"

#include "smaaffsh/error.hpp"
#include "smaaffsh/model_io.hpp"
#include "smaaffsh/reference_problems.hpp"
#include "smaaffsh/report.hpp"
#include "smaaffsh/smaa.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

namespace smaaffsh {

namespace {

struct RunConfig {
  std::string problem;
  std::optional<std::size_t> iterations;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> rule;
  std::optional<std::string> defuzz;
  std::optional<double> threshold;
  std::string level = "category";
  std::string out_dir = "out";
  unsigned threads = 0;
  bool deterministic = false;
  bool strict = false;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::Io, "cannot open for writing", path.string());
  file << content;
  file.close();
  if (!file) throw Error(ErrorCode::Io, "write failed", path.string());
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Problem problem = load_problem(path);
  out << fmt::format("{}: valid ({} alternatives, {} elementary criteria, {} categories)\n", path,
                     problem.alternatives.size(), problem.tree.leaf_count(), problem.category_count());
  return 0;
}

int cmd_run(const RunConfig& config, std::ostream& out) {
  const Problem problem = load_problem(config.problem);
  SmaaOptions options = SmaaOptions::from(problem.settings);
  double threshold = problem.settings.threshold;
  if (config.iterations) options.iterations = *config.iterations;
  if (config.seed) options.seed = *config.seed;
  if (config.rule) options.rule = *parse_rule(*config.rule);
  if (config.defuzz) options.defuzz = *parse_defuzz_method(*config.defuzz);
  if (config.threshold) threshold = *config.threshold;
  options.threads = config.threads;
  options.strict = config.strict;
  const ReportLevel level = *parse_report_level(config.level);

  const AcceptabilityResult result =
      config.deterministic ? run_deterministic(problem, options) : run_smaa(problem, options);

  const std::filesystem::path dir(config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, ec.message(), dir.string());
  const std::string stem = fmt::format("acceptability_{}", to_string(level));
  const std::string text = write_report(result, problem, level, ReportFormat::Text, threshold);
  write_file(dir / (stem + ".csv"), write_report(result, problem, level, ReportFormat::Delimited, threshold));
  write_file(dir / (stem + ".txt"), text);

  out << text << "\n" << summary(result, problem, threshold);
  out << fmt::format("Reports written to {}\n", (dir / (stem + ".{csv,txt}")).string());
  return 0;
}

std::vector<std::string> keys(std::initializer_list<std::string> names) { return names; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hierarchical stochastic fuzzy flow sorting (SMAA-FFS-H)", "smaa-ffs-h"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a problem file and report the first error");
  validate->add_option("problem", validate_path, "Problem file (JSON)")->required();

  RunConfig config;
  auto* run = app.add_subcommand("run", "Run the simulation and write acceptability reports");
  run->add_option("problem", config.problem, "Problem file (JSON)")->required();
  run->add_option("--iterations", config.iterations, "Monte Carlo iterations (default: file setting, else 10000)")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", config.seed, "Root seed (default: file setting, else 0)");
  run->add_option("--rule", config.rule, "Assignment rule for the overall index")
      ->check(CLI::IsMember(keys({"positive", "negative", "net"})));
  run->add_option("--level", config.level, "Report level")
      ->check(CLI::IsMember(keys({"category", "first-level", "all-nodes"})))
      ->capture_default_str();
  run->add_option("--out", config.out_dir, "Output directory")->capture_default_str();
  run->add_option("--threads", config.threads, "Worker threads, 0 = all cores")->capture_default_str();
  run->add_flag("--deterministic", config.deterministic, "Run the engine once on central values");
  run->add_option("--defuzz", config.defuzz, "Defuzzification")
      ->check(CLI::IsMember(keys({"centroid", "paper-literal"})));
  run->add_flag("--strict", config.strict, "Fail on flows outside the profile range instead of clamping");
  run->add_option("--threshold", config.threshold, "Exploitation threshold in [0, 1]")->check(CLI::Range(0.0, 1.0));

  std::string example_name;
  auto* example = app.add_subcommand("example", "Print a worked example step by step");
  example->add_option("name", example_name, "Example name (appendix-a)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) return cmd_validate(validate_path, out);
    if (*run) return cmd_run(config, out);
    if (*example) {
      out << example_walkthrough(example_name);
      return 0;
    }
  } catch (const Error& e) {
    err << to_string(e.code());
    if (!e.path().empty()) err << " " << e.path();
    err << ": " << e.what() << "\n";
    return e.code() == ErrorCode::Io ? 2 : 1;
  } catch (const std::exception& e) {
    err << "ERROR: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace smaaffsh
