#include "oracle.hpp"
#include "smaaffsh/error.hpp"
#include "smaaffsh/preference.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace smaaffsh;

namespace {

PreferenceSpec make(Shape shape, double q = 0, double p = 0, double s = 0,
                    Direction direction = Direction::Maximize) {
  return PreferenceSpec{shape, q, p, s, direction};
}

}  // namespace

TEST(Preference, ShapesAtKnownPoints) {
  EXPECT_EQ(crisp_preference(make(Shape::Usual), 0.0), 0.0);
  EXPECT_EQ(crisp_preference(make(Shape::Usual), 1e-9), 1.0);
  EXPECT_EQ(crisp_preference(make(Shape::UShape, 2), 2.0), 0.0);
  EXPECT_EQ(crisp_preference(make(Shape::UShape, 2), 2.5), 1.0);
  EXPECT_DOUBLE_EQ(crisp_preference(make(Shape::VShape, 0, 4), 1.0), 0.25);
  EXPECT_EQ(crisp_preference(make(Shape::VShape, 0, 4), 5.0), 1.0);
  EXPECT_EQ(crisp_preference(make(Shape::Level, 1, 3), 2.0), 0.5);
  EXPECT_EQ(crisp_preference(make(Shape::Level, 1, 3), 3.5), 1.0);
  EXPECT_DOUBLE_EQ(crisp_preference(make(Shape::VShapeIndifference, 1, 3), 2.0), 0.5);
  EXPECT_DOUBLE_EQ(crisp_preference(make(Shape::Gaussian, 0, 0, 1), 1.0), 1.0 - std::exp(-0.5));
  EXPECT_EQ(crisp_preference(make(Shape::Gaussian, 0, 0, 1), -1.0), 0.0);
}

TEST(Preference, MonotoneAndBoundedForAllShapes) {
  const std::vector<PreferenceSpec> specs{make(Shape::Usual), make(Shape::UShape, 1), make(Shape::VShape, 0, 2),
                                          make(Shape::Level, 0.5, 2), make(Shape::VShapeIndifference, 0.5, 2),
                                          make(Shape::Gaussian, 0, 0, 1.5)};
  for (const auto& spec : specs) {
    double previous = 0.0;
    for (double d = -5.0; d <= 5.0; d += 0.01) {
      const double v = crisp_preference(spec, d);
      EXPECT_GE(v, previous - 1e-15) << to_string(spec.shape) << " at " << d;
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      if (d <= 0.0) EXPECT_EQ(v, 0.0);
      previous = v;
    }
  }
}

TEST(Preference, AgreesWithIndependentOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  const std::vector<PreferenceSpec> specs{make(Shape::Usual), make(Shape::UShape, 1), make(Shape::VShape, 0, 2),
                                          make(Shape::Level, 0.5, 2), make(Shape::VShapeIndifference, 0.5, 2),
                                          make(Shape::Gaussian, 0, 0, 1.5)};
  for (int i = 0; i < 2000; ++i) {
    const double d = u(rng);
    for (const auto& spec : specs) EXPECT_DOUBLE_EQ(crisp_preference(spec, d), oracle::preference(spec, d));
  }
}

TEST(Preference, ValidationRejectsBadThresholds) {
  auto code = [](const PreferenceSpec& spec) {
    try {
      validate(spec);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code(make(Shape::Level, 3, 1)), ErrorCode::Threshold);
  EXPECT_EQ(code(make(Shape::UShape, -1)), ErrorCode::Threshold);
  EXPECT_EQ(code(make(Shape::Gaussian)), ErrorCode::Threshold);
  EXPECT_NO_THROW(validate(make(Shape::VShapeIndifference, 1, 1)));
}

TEST(Preference, OrientationFollowsDirection) {
  const auto min = make(Shape::Usual, 0, 0, 0, Direction::Minimize);
  // Minimizing: a lower value is preferred.
  EXPECT_EQ(defuzzify(fuzzy_preference(min, Tfn::crisp(1), Tfn::crisp(5))), 1.0);
  EXPECT_EQ(defuzzify(fuzzy_preference(min, Tfn::crisp(5), Tfn::crisp(1))), 0.0);
  EXPECT_EQ(oriented_difference(Direction::Minimize, Tfn::crisp(1), Tfn::crisp(5)).mode, 4.0);
}

TEST(Preference, FuzzyPreferenceEvaluatesAtThreePoints) {
  const auto spec = make(Shape::VShape, 0, 4);
  // D = (7;0.75;0.75) - (5;0.75;0.75) = (2; 1.5; 1.5)
  const Tfn p = fuzzy_preference(spec, Tfn{7, 0.75, 0.75}, Tfn{5, 0.75, 0.75});
  EXPECT_DOUBLE_EQ(p.mode, 0.5);
  EXPECT_DOUBLE_EQ(p.left, 0.5 - 0.125);
  EXPECT_DOUBLE_EQ(p.right, 0.875 - 0.5);
  EXPECT_DOUBLE_EQ(defuzzify(p), (0.125 + 0.5 + 0.875) / 3.0);
}

TEST(Preference, CentroidOfFuzzyPreferenceStaysInUnitInterval) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> s(0.0, 2.0);
  const auto spec = make(Shape::Usual);
  for (int i = 0; i < 1000; ++i) {
    const Tfn a{u(rng), s(rng), s(rng)};
    const Tfn b{u(rng), s(rng), s(rng)};
    const double v = defuzzify(fuzzy_preference(spec, a, b));
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_NEAR(v, oracle::fuzzy_preference_centroid(spec, a, b), 1e-15);
  }
}

TEST(Preference, CrispDifferenceGivesCrispPreference) {
  const Tfn p = fuzzy_preference(make(Shape::Usual), Tfn::crisp(3), Tfn::crisp(1));
  EXPECT_TRUE(p.is_crisp());
  EXPECT_EQ(p.mode, 1.0);
}

TEST(Preference, NamesRoundTrip) {
  for (auto shape : {Shape::Usual, Shape::UShape, Shape::VShape, Shape::Level, Shape::VShapeIndifference,
                     Shape::Gaussian}) {
    EXPECT_EQ(parse_shape(to_string(shape)), shape);
  }
  EXPECT_EQ(parse_direction("min"), Direction::Minimize);
  EXPECT_EQ(parse_direction("maximize"), Direction::Maximize);
  EXPECT_FALSE(parse_direction("up"));
}
