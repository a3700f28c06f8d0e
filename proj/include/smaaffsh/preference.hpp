#pragma once

#include "smaaffsh/fuzzy.hpp"

#include <optional>
#include <string_view>

namespace smaaffsh {

/// The six generalized criteria.
enum class Shape {
  Usual,        ///< 1 for any positive difference
  UShape,       ///< 1 beyond the indifference threshold q
  VShape,       ///< linear up to the preference threshold p
  Level,        ///< 0 up to q, 1/2 up to p, 1 beyond
  VShapeIndifference,  ///< 0 up to q, linear between q and p
  Gaussian,     ///< 1 - exp(-d^2 / 2s^2) for positive d
};

enum class Direction { Maximize, Minimize };

struct PreferenceSpec {
  Shape shape = Shape::Usual;
  double q = 0.0;  ///< indifference threshold
  double p = 0.0;  ///< preference threshold
  double s = 0.0;  ///< Gaussian spread
  Direction direction = Direction::Maximize;

  friend bool operator==(const PreferenceSpec&, const PreferenceSpec&) = default;
};

std::string_view to_string(Shape shape);
std::optional<Shape> parse_shape(std::string_view name);
std::string_view to_string(Direction direction);
std::optional<Direction> parse_direction(std::string_view name);

bool uses_q(Shape shape);
bool uses_p(Shape shape);
bool uses_s(Shape shape);

/// Throws Error(Threshold) when thresholds are negative, q > p, a threshold the
/// shape does not use is non-zero, or a Gaussian spread is not positive.
void validate(const PreferenceSpec& spec);

/// Preference degree in [0, 1] for an already oriented difference d
/// (g(a) - g(b) when maximizing). Non-decreasing in d.
double crisp_preference(const PreferenceSpec& spec, double d);

/// Difference of `a` over `b` oriented by the criterion direction: a - b when
/// maximizing, b - a when minimizing.
Tfn oriented_difference(Direction direction, const Tfn& a, const Tfn& b);

/// Fuzzy preference of `a` over `b`. With D = (d; sL; sR) the oriented fuzzy
/// difference, returns (P(d); P(d) - P(d - sL); P(d + sR) - P(d)).
Tfn fuzzy_preference(const PreferenceSpec& spec, const Tfn& a, const Tfn& b);

}  // namespace smaaffsh
