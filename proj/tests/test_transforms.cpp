#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "paretoscope/error.hpp"
#include "paretoscope/transforms.hpp"

using namespace paretoscope;
using testing_support::levels;

namespace {

Rational scalar_of(const TransformSpec& t, const Allocation& a, AgentId k) {
  return evaluate_transform(t, a, k).scalar();
}

}  // namespace

TEST(EvaluateTransform, Examples) {
  EXPECT_EQ(scalar_of(TransformSpec::own(), scalar_allocation({2, 1}), 0), Rational(2));
  EXPECT_EQ(scalar_of(TransformSpec::relative_mean(), scalar_allocation({2, 1}), 0), Rational(4, 3));
  EXPECT_EQ(scalar_of(TransformSpec::relative_nbhd({1}), scalar_allocation({2, 4}), 0), Rational(1, 2));
  EXPECT_EQ(scalar_of(TransformSpec::weighted_own({1, 3}), allocation({{2, 1}, {0, 0}}), 0), Rational(5));
}

TEST(EvaluateTransform, OwnBundleIsVectorForSeveralCommodities) {
  const auto info = evaluate_transform(TransformSpec::own(), allocation({{1, 2}, {3, 4}}), 1);
  ASSERT_FALSE(info.is_scalar());
  EXPECT_EQ(info.vector(), (Bundle{3, 4}));
  EXPECT_THROW(info.scalar(), Error);
}

TEST(EvaluateTransform, WeightedRelativeMean) {
  // aggregates 1*1 + 2*1 = 3 and 1*3 + 2*0 = 3 -> mean 3
  const auto a = allocation({{1, 1}, {3, 0}});
  EXPECT_EQ(scalar_of(TransformSpec::relative_mean({1, 2}), a, 0), Rational(1));
  EXPECT_EQ(scalar_of(TransformSpec::relative_mean(), a, 0), Rational(2, 5) * 2);
}

TEST(EvaluateTransform, Errors) {
  try {
    evaluate_transform(TransformSpec::relative_mean(), scalar_allocation({0, 0}), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroReferencePoint);
  }
  try {
    evaluate_transform(TransformSpec::own(), scalar_allocation({1, 1}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidAgent);
  }
  try {
    evaluate_transform(TransformSpec::relative_nbhd({5}), scalar_allocation({1, 1}), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidAgent);
  }
  EXPECT_THROW(evaluate_transform(TransformSpec::weighted_own({1, 1}), scalar_allocation({1, 1}), 0), Error);
}

TEST(TransformSpec, ValidatesWeightsAndNeighbourhood) {
  EXPECT_THROW(TransformSpec::weighted_own({0}), Error);
  EXPECT_THROW(TransformSpec::relative_mean({1, -1}), Error);
  EXPECT_THROW(TransformSpec::relative_nbhd({}), Error);
}

TEST(OwnMonotonicity, Examples) {
  auto r = verify_own_monotonicity(TransformSpec::relative_mean(), scalar_allocation({1, 1}), 0, 1);
  EXPECT_EQ(r.sign, Sign::Positive);
  EXPECT_EQ(r.before.scalar(), Rational(1));
  EXPECT_EQ(r.after.scalar(), Rational(4, 3));

  EXPECT_EQ(verify_own_monotonicity(TransformSpec::own(), scalar_allocation({1, 1}), 0, 1).sign, Sign::Positive);

  r = verify_own_monotonicity(TransformSpec::weighted_own({1}), scalar_allocation({0, 5}), 0, 2);
  EXPECT_EQ(r.sign, Sign::Positive);
  EXPECT_EQ(r.before.scalar(), Rational(0));
  EXPECT_EQ(r.after.scalar(), Rational(2));

  EXPECT_EQ(verify_own_monotonicity(TransformSpec::own(), allocation({{1, 1}, {1, 1}}), 1, 1).sign, Sign::Positive);
}

TEST(OwnMonotonicity, RejectsZeroDelta) {
  EXPECT_THROW(verify_own_monotonicity(TransformSpec::own(), scalar_allocation({1, 1}), 0, 0), Error);
}

TEST(OwnMonotonicity, HoldsForEveryBuiltinOnPositiveGrid) {
  const auto states = enumerate_feasible(FeasibleSet::box_grid(levels({1, 2, 3})), Polity(2, 1));
  for (const auto& fam : testing_support::builtin_families(2)) {
    for (const auto& s : states) {
      for (AgentId k = 0; k < 2; ++k) {
        EXPECT_EQ(verify_own_monotonicity(fam.transforms[k], s, k, 1).sign, Sign::Positive) << fam.name;
      }
    }
  }
}

TEST(CrossEffectSign, Examples) {
  auto r = cross_effect_sign(TransformSpec::relative_mean(), scalar_allocation({1, 1}), 1, 0, 1);
  EXPECT_EQ(r.sign, Sign::Negative);
  EXPECT_EQ(r.after.scalar(), Rational(2, 3));

  EXPECT_EQ(cross_effect_sign(TransformSpec::own(), scalar_allocation({1, 1}), 1, 0, 1).sign, Sign::Zero);
  EXPECT_EQ(cross_effect_sign(TransformSpec::relative_nbhd({2}), scalar_allocation({1, 1, 1}), 1, 0, 5).sign,
            Sign::Zero);
  EXPECT_THROW(cross_effect_sign(TransformSpec::own(), scalar_allocation({1, 1}), 1, 1, 1), Error);
}

TEST(CrossEffectSign, RelativeMeanIsNegativeOnPositiveGrid) {
  const auto states = enumerate_feasible(FeasibleSet::box_grid(levels({1, 2, 3})), Polity(2, 1));
  for (const auto& s : states) {
    for (AgentId obs = 0; obs < 2; ++obs) {
      for (AgentId g = 0; g < 2; ++g) {
        if (obs == g) continue;
        EXPECT_EQ(cross_effect_sign(TransformSpec::relative_mean(), s, obs, g, 1).sign, Sign::Negative);
      }
    }
  }
}

TEST(RelativeMean, ScaleInvariant) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> q(0, 9);
  std::uniform_int_distribution<int> factor_num(1, 7);
  std::uniform_int_distribution<int> factor_den(1, 5);
  const auto t = TransformSpec::relative_mean({1, 2});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Bundle> bundles;
    for (int i = 0; i < 3; ++i) bundles.push_back(Bundle{q(rng), q(rng)});
    bundles[0] = Bundle{q(rng) + 1, q(rng)};  // keeps the mean positive
    const Allocation a(bundles);
    const Rational factor(factor_num(rng), factor_den(rng));
    std::vector<Bundle> scaled;
    for (const auto& b : bundles) scaled.push_back(Bundle{b[0].value() * factor, b[1].value() * factor});
    const Allocation s(scaled);
    for (AgentId k = 0; k < 3; ++k) EXPECT_EQ(scalar_of(t, a, k), scalar_of(t, s, k));
  }
}

TEST(CompareInfo, MixedKindsRejected) {
  EXPECT_THROW(compare_info(PreferenceInfo(Rational(1)), PreferenceInfo(Bundle{1, 1})), Error);
}
