#pragma once

#include <optional>
#include <string_view>

namespace smaaffsh {

/// Triangular fuzzy number (m; alpha; beta) in LR form: membership 1 at `mode`,
/// falling linearly to 0 at `mode - left` and `mode + right`.
struct Tfn {
  double mode = 0.0;
  double left = 0.0;
  double right = 0.0;

  static constexpr Tfn crisp(double value) { return {value, 0.0, 0.0}; }

  constexpr double lower() const { return mode - left; }
  constexpr double upper() const { return mode + right; }
  constexpr bool is_crisp() const { return left == 0.0 && right == 0.0; }

  friend constexpr bool operator==(const Tfn&, const Tfn&) = default;
};

Tfn add(const Tfn& a, const Tfn& b);
/// Spreads cross-couple: (m - n; alpha + delta; beta + gamma). a - a is not zero.
Tfn subtract(const Tfn& a, const Tfn& b);
/// Throws Error(InvalidArgument) for a negative factor.
Tfn scale(double factor, const Tfn& a);
/// Mirror image (-m; beta; alpha).
Tfn negate(const Tfn& a);

inline Tfn operator+(const Tfn& a, const Tfn& b) { return add(a, b); }
inline Tfn operator-(const Tfn& a, const Tfn& b) { return subtract(a, b); }

enum class DefuzzMethod {
  Centroid,      ///< m + (beta - alpha) / 3, the triangle centroid
  PaperLiteral,  ///< m + (beta + alpha) / 3
};

double defuzzify(const Tfn& a, DefuzzMethod method = DefuzzMethod::Centroid);

std::string_view to_string(DefuzzMethod method);
std::optional<DefuzzMethod> parse_defuzz_method(std::string_view name);

}  // namespace smaaffsh
