#include "smaaffsh/fuzzy.hpp"

#include "smaaffsh/error.hpp"

#include <fmt/format.h>

namespace smaaffsh {

Tfn add(const Tfn& a, const Tfn& b) {
  return {a.mode + b.mode, a.left + b.left, a.right + b.right};
}

Tfn subtract(const Tfn& a, const Tfn& b) {
  return {a.mode - b.mode, a.left + b.right, a.right + b.left};
}

Tfn scale(double factor, const Tfn& a) {
  if (factor < 0.0) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("fuzzy scaling requires a non-negative factor, got {}", factor));
  }
  return {factor * a.mode, factor * a.left, factor * a.right};
}

Tfn negate(const Tfn& a) { return {-a.mode, a.right, a.left}; }

double defuzzify(const Tfn& a, DefuzzMethod method) {
  switch (method) {
    case DefuzzMethod::Centroid:
      return a.mode + (a.right - a.left) / 3.0;
    case DefuzzMethod::PaperLiteral:
      return a.mode + (a.right + a.left) / 3.0;
  }
  return a.mode;
}

std::string_view to_string(DefuzzMethod method) {
  return method == DefuzzMethod::Centroid ? "centroid" : "paper-literal";
}

std::optional<DefuzzMethod> parse_defuzz_method(std::string_view name) {
  if (name == "centroid") return DefuzzMethod::Centroid;
  if (name == "paper-literal") return DefuzzMethod::PaperLiteral;
  return std::nullopt;
}

}  // namespace smaaffsh
