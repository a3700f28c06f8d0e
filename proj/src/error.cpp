#include "smaaffsh/error.hpp"

namespace smaaffsh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Schema: return "SCHEMA";
    case ErrorCode::Io: return "IO";
    case ErrorCode::UnknownTerm: return "UNKNOWN_TERM";
    case ErrorCode::Scale: return "SCALE";
    case ErrorCode::ProfileOverlap: return "PROFILE_OVERLAP";
    case ErrorCode::ProfileDominance: return "PROFILE_DOMINANCE";
    case ErrorCode::ProfileCount: return "PROFILE_COUNT";
    case ErrorCode::WeightSpec: return "WEIGHT_SPEC";
    case ErrorCode::MissingEvaluation: return "MISSING_EVALUATION";
    case ErrorCode::EvaluationBounds: return "EVALUATION_BOUNDS";
    case ErrorCode::Tree: return "TREE";
    case ErrorCode::Threshold: return "THRESHOLD";
    case ErrorCode::Dimension: return "DIMENSION";
    case ErrorCode::Infeasible: return "INFEASIBLE";
    case ErrorCode::Boundary: return "BOUNDARY";
    case ErrorCode::ProfileOrder: return "PROFILE_ORDER";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::UnknownNode: return "UNKNOWN_NODE";
    case ErrorCode::UnknownExample: return "UNKNOWN_EXAMPLE";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message, std::string path)
    : std::runtime_error(message), code_(code), path_(std::move(path)) {}

}  // namespace smaaffsh
