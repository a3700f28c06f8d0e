#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smaaffsh {

/// Stable error codes surfaced by validation and by the CLI diagnostics.
enum class ErrorCode {
  Schema,
  Io,
  UnknownTerm,
  Scale,
  ProfileOverlap,
  ProfileDominance,
  ProfileCount,
  WeightSpec,
  MissingEvaluation,
  EvaluationBounds,
  Tree,
  Threshold,
  Dimension,
  Infeasible,
  Boundary,
  ProfileOrder,
  InvalidArgument,
  UnknownNode,
  UnknownExample,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string path = {});

  ErrorCode code() const noexcept { return code_; }
  /// Location of the offending field, e.g. `alternatives[1].values[3]`. May be empty.
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorCode code_;
  std::string path_;
};

}  // namespace smaaffsh
