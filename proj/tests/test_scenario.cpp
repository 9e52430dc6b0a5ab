#include <gtest/gtest.h>

#include "paretoscope/error.hpp"
#include "paretoscope/scenario.hpp"
#include "paretoscope/text.hpp"

using namespace paretoscope;

namespace {

Errc code_of(std::string_view text) {
  try {
    parse_scenario_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalInvariant;
}

std::string message_of(std::string_view text) {
  try {
    parse_scenario_text(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Text, Allocations) {
  EXPECT_EQ(text::parse_allocation("(1, 1/2)"), scalar_allocation({1, Rational(1, 2)}));
  EXPECT_EQ(text::parse_allocation("([1,2],[0,0.5])"), allocation({{1, 2}, {0, Rational(1, 2)}}));
  EXPECT_EQ(text::format_allocation(allocation({{1, 2}, {0, Rational(1, 2)}})), "([1,2],[0,1/2])");
  EXPECT_EQ(text::format_allocation(scalar_allocation({Rational(4, 3), 2})), "(4/3,2)");
  EXPECT_THROW(text::parse_allocation("(1,[1,2])"), ParseError);
  EXPECT_THROW(text::parse_allocation("(1,-1)"), ParseError);
  EXPECT_THROW(text::parse_allocation("(1,1"), ParseError);
}

TEST(Text, AllocationFormatParseRoundTrip) {
  const auto a = allocation({{Rational(7, 3), 0}, {5, Rational(1, 9)}, {0, 0}});
  EXPECT_EQ(text::parse_allocation(text::format_allocation(a)), a);
}

TEST(Text, ParseErrorColumn) {
  try {
    text::parse_allocation("(1, x)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  try {
    text::parse_moves("(1,1)->(2,1); (1,1)->(2,?)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 25u);
  }
}

TEST(Text, Moves) {
  const auto ms = text::parse_moves("(1,1)->(2,1); (1,1) -> (2,0);");
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[1], Move(scalar_allocation({1, 1}), scalar_allocation({2, 0})));
  EXPECT_THROW(text::parse_move("(1,1)->(1,1,1)"), ParseError);
}

TEST(Text, Transforms) {
  EXPECT_EQ(text::parse_transform("own"), TransformSpec::own());
  EXPECT_EQ(text::parse_transform("relative_mean"), TransformSpec::relative_mean());
  EXPECT_EQ(text::parse_transform("relative_mean(1, 2)"), TransformSpec::relative_mean({1, 2}));
  EXPECT_EQ(text::parse_transform("weighted_own(1/2)"), TransformSpec::weighted_own({Rational(1, 2)}));
  EXPECT_EQ(text::parse_transform("relative_nbhd(2,3;1,1)"), TransformSpec::relative_nbhd({1, 2}, {1, 1}));
  EXPECT_EQ(text::parse_transform("relative_nbhd(2)"), TransformSpec::relative_nbhd({1}));
  for (const auto& t : {TransformSpec::own(), TransformSpec::weighted_own({2, 3}), TransformSpec::relative_mean(),
                        TransformSpec::relative_nbhd({0, 2}, {Rational(1, 3)})}) {
    EXPECT_EQ(text::parse_transform(text::format_transform(t)), t);
  }
  EXPECT_THROW(text::parse_transform("owned"), ParseError);
  EXPECT_THROW(text::parse_transform("relative_nbhd(0)"), ParseError);
  EXPECT_THROW(text::parse_transform("weighted_own(0)"), ParseError);
  EXPECT_THROW(text::parse_transform("own extra"), ParseError);
}

TEST(Text, LevelsAndCombiners) {
  const auto l = text::parse_levels("0..2; 1/2, 1");
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], (std::vector<Quantity>{0, 1, 2}));
  EXPECT_EQ(l[1], (std::vector<Quantity>{Quantity(Rational(1, 2)), 1}));
  EXPECT_THROW(text::parse_levels("2..1"), ParseError);
  EXPECT_TRUE(std::holds_alternative<Maximin>(text::parse_combiner("maximin")));
  EXPECT_EQ(std::get<WeightedSum>(text::parse_combiner("weighted_sum(0,1)")).weights, (std::vector<Rational>{0, 1}));
}

TEST(ParseScenario, MinimalBoxGrid) {
  const auto sc = parse_scenario_text(
      "agents = 2\n"
      "commodities = 1\n"
      "feasible.kind = box_grid\n"
      "feasible.levels = 0..2\n"
      "transform.1 = own\n"
      "transform.2 = own\n");
  EXPECT_EQ(sc.polity, Polity(2, 1));
  EXPECT_EQ(enumerate_feasible(sc.feasible, sc.polity).size(), 9u);
  EXPECT_EQ(sc.transforms, uniform(TransformSpec::own(), 2));
  EXPECT_EQ(sc.digest.size(), 16u);
}

TEST(ParseScenario, FallbackTransform) {
  const auto sc = parse_scenario_text(
      "agents = 3\nfeasible.kind = fixed_total\nfeasible.total = 3\nfeasible.step = 1\n"
      "transform.* = relative_mean   # everyone\n");
  EXPECT_EQ(sc.transforms, uniform(TransformSpec::relative_mean(), 3));
}

TEST(ParseScenario, AllKeys) {
  const auto sc = parse_scenario_text(R"(
    # everything at once
    agents = 2
    commodities = 1
    feasible.kind = list
    feasible.list = (0,2); (1,1); (2,0)
    transform.* = own
    transform.2 = relative_nbhd(1)
    swf = weighted_sum(0, 1)
    swf.value = weighted_own(2)
    moves = (1,1)->(2,1)
    discover.beneficiary = 2
    discover.steps = 4
    discover.increment = 1/2
    discover.initial = (1,1)
    discover.lattice_step = 1/2
    scan.cap = 500
  )");
  EXPECT_EQ(sc.transforms[1], TransformSpec::relative_nbhd({0}));
  ASSERT_TRUE(sc.swf.has_value());
  EXPECT_EQ(sc.swf->agent_value.size(), 2u);
  EXPECT_EQ(sc.moves.size(), 1u);
  EXPECT_EQ(*sc.discover.beneficiary, 1u);
  EXPECT_EQ(*sc.discover.increment, Quantity(Rational(1, 2)));
  EXPECT_EQ(sc.scan_cap, 500u);
}

TEST(ParseScenario, ValidationErrors) {
  const std::string head = "agents = 2\nfeasible.kind = box_grid\nfeasible.levels = 0,1\ntransform.* = own\n";
  EXPECT_EQ(code_of(head + "swf = weighted_sum(0,0)\n"), Errc::ValidationError);
  EXPECT_NE(message_of(head + "swf = weighted_sum(0,0)\n").find("weights all zero"), std::string::npos);
  EXPECT_NE(message_of(head + "swf = weighted_sum(0,0)\n").find("'swf'"), std::string::npos);
  EXPECT_EQ(code_of(head + "bogus = 1\n"), Errc::ValidationError);
  EXPECT_EQ(code_of(head + "transform.3 = own\n"), Errc::ValidationError);
  EXPECT_EQ(code_of(head + "transform.1 = relative_nbhd(3)\n"), Errc::ValidationError);
  EXPECT_EQ(code_of(head + "transform.1 = weighted_own(1,1)\n"), Errc::ValidationError);
  EXPECT_EQ(code_of(head + "discover.beneficiary = 3\n"), Errc::ValidationError);
  EXPECT_EQ(code_of(head + "moves = (1,1,1)->(1,1,1)\n"), Errc::ValidationError);
  EXPECT_EQ(code_of(head + "swf.value = own\n"), Errc::ValidationError);
  EXPECT_EQ(code_of(head + "agents = 3\n"), Errc::ValidationError);  // duplicate
  EXPECT_EQ(code_of("agents = 2\nfeasible.kind = box_grid\nfeasible.levels = 0,1\n"), Errc::ValidationError);
  EXPECT_EQ(code_of("feasible.kind = box_grid\nfeasible.levels = 0,1\ntransform.* = own\n"), Errc::ValidationError);
  EXPECT_EQ(code_of("agents = 2\nfeasible.kind = fixed_total\nfeasible.total = 3\nfeasible.step = 2\ntransform.* = own\n"),
            Errc::ValidationError);
  EXPECT_EQ(code_of("agents = 0\n"), Errc::ValidationError);
  EXPECT_EQ(code_of("agents = 2\nfeasible.kind = hexagon\n"), Errc::ValidationError);
}

TEST(ParseScenario, ParseErrorsCarryLineAndColumn) {
  try {
    parse_scenario_text("agents = 2\nfeasible.kind = box_grid\nfeasible.levels = 0, x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 22u);
  }
  try {
    parse_scenario_text("agents = 2\n  no equals sign\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ParseScenario, MissingFile) {
  EXPECT_THROW(parse_scenario("/nonexistent/file.scn"), Error);
}

TEST(Digest, Fnv1a) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}
