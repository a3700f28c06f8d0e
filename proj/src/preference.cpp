#include "smaaffsh/preference.hpp"

#include "smaaffsh/error.hpp"

#include <fmt/format.h>

#include <cmath>

namespace smaaffsh {

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::Usual: return "usual";
    case Shape::UShape: return "u-shape";
    case Shape::VShape: return "v-shape";
    case Shape::Level: return "level";
    case Shape::VShapeIndifference: return "v-shape-indifference";
    case Shape::Gaussian: return "gaussian";
  }
  return "usual";
}

std::optional<Shape> parse_shape(std::string_view name) {
  for (Shape s : {Shape::Usual, Shape::UShape, Shape::VShape, Shape::Level, Shape::VShapeIndifference,
                  Shape::Gaussian}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Direction direction) { return direction == Direction::Maximize ? "max" : "min"; }

std::optional<Direction> parse_direction(std::string_view name) {
  if (name == "max" || name == "maximize") return Direction::Maximize;
  if (name == "min" || name == "minimize") return Direction::Minimize;
  return std::nullopt;
}

bool uses_q(Shape shape) {
  return shape == Shape::UShape || shape == Shape::Level || shape == Shape::VShapeIndifference;
}

bool uses_p(Shape shape) {
  return shape == Shape::VShape || shape == Shape::Level || shape == Shape::VShapeIndifference;
}

bool uses_s(Shape shape) { return shape == Shape::Gaussian; }

void validate(const PreferenceSpec& spec) {
  auto fail = [&](const std::string& message) {
    throw Error(ErrorCode::Threshold, fmt::format("{} criterion: {}", to_string(spec.shape), message));
  };
  if (spec.q < 0.0 || spec.p < 0.0 || spec.s < 0.0) fail("thresholds must be non-negative");
  if (!uses_q(spec.shape) && spec.q != 0.0) fail("indifference threshold q is not used by this shape");
  if (!uses_p(spec.shape) && spec.p != 0.0) fail("preference threshold p is not used by this shape");
  if (!uses_s(spec.shape) && spec.s != 0.0) fail("spread s is not used by this shape");
  if (uses_q(spec.shape) && uses_p(spec.shape) && spec.q > spec.p) {
    fail(fmt::format("indifference threshold q={} exceeds preference threshold p={}", spec.q, spec.p));
  }
  if (uses_s(spec.shape) && !(spec.s > 0.0)) fail("spread s must be positive");
}

double crisp_preference(const PreferenceSpec& spec, double d) {
  switch (spec.shape) {
    case Shape::Usual:
      return d > 0.0 ? 1.0 : 0.0;
    case Shape::UShape:
      return d > spec.q ? 1.0 : 0.0;
    case Shape::VShape:
      if (d <= 0.0) return 0.0;
      if (d >= spec.p) return 1.0;
      return d / spec.p;
    case Shape::Level:
      if (d <= spec.q) return 0.0;
      if (d <= spec.p) return 0.5;
      return 1.0;
    case Shape::VShapeIndifference:
      if (d <= spec.q) return 0.0;
      if (d >= spec.p) return 1.0;
      return (d - spec.q) / (spec.p - spec.q);
    case Shape::Gaussian:
      if (d <= 0.0) return 0.0;
      return 1.0 - std::exp(-(d * d) / (2.0 * spec.s * spec.s));
  }
  return 0.0;
}

Tfn oriented_difference(Direction direction, const Tfn& a, const Tfn& b) {
  return direction == Direction::Maximize ? subtract(a, b) : subtract(b, a);
}

Tfn fuzzy_preference(const PreferenceSpec& spec, const Tfn& a, const Tfn& b) {
  const Tfn diff = oriented_difference(spec.direction, a, b);
  const double centre = crisp_preference(spec, diff.mode);
  if (diff.is_crisp()) return Tfn::crisp(centre);
  return {centre, centre - crisp_preference(spec, diff.mode - diff.left),
          crisp_preference(spec, diff.mode + diff.right) - centre};
}

}  // namespace smaaffsh
