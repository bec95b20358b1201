#include "paratop/json_io.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace paratop {
namespace {

TEST(SpaceJson, MinNbhdForm) {
  const FiniteSpace s = parse_space(R"({"points": ["a","b"], "min_nbhd": {"a": ["a","b"], "b": ["b"]}})");
  EXPECT_EQ(s, fixtures::sierpinski());
}

TEST(SpaceJson, OpensForm) {
  const FiniteSpace s = parse_space(R"({"points": ["a","b"], "opens": [[], ["b"], ["a","b"]]})");
  EXPECT_EQ(s, fixtures::sierpinski());
}

TEST(SpaceJson, RoundTrips) {
  for (const auto& s : enumerate_spaces(3)) {
    EXPECT_EQ(space_from_json(space_to_json(s)), s);
    EXPECT_EQ(space_from_json(opens_to_json(s)), s);
    EXPECT_EQ(parse_space(space_to_json(s).dump()), s);
  }
}

TEST(SpaceJson, Errors) {
  auto code_of = [](std::string_view text) {
    try {
      parse_space(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of("{"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("[]"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of(R"({"points": ["a"]})"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of(R"({"points": ["a"], "opens": [[],["a"]], "min_nbhd": {"a": ["a"]}})"),
            ErrorCode::SyntaxError);
  EXPECT_EQ(code_of(R"({"points": [], "opens": [[]]})"), ErrorCode::EmptyCarrier);
  EXPECT_EQ(code_of(R"({"points": ["a","b"], "min_nbhd": {"a": ["b"], "b": ["b"]}})"), ErrorCode::NotATopology);
  EXPECT_EQ(code_of(R"({"points": ["a","b"], "min_nbhd": {"a": ["a"]}})"), ErrorCode::NotATopology);
  EXPECT_EQ(code_of(R"({"points": ["a"], "min_nbhd": {"a": ["z"]}})"), ErrorCode::UnknownPoint);
  EXPECT_EQ(code_of(R"({"points": ["a","b","c"], "opens": [[],["a"],["b"],["a","b","c"]]})"),
            ErrorCode::NotATopology);
}

TEST(SpaceJson, SyntaxErrorPosition) {
  try {
    parse_space(R"({"points": ["a",)");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_GT(e.position(), 0U);
  }
}

TEST(AbelianJson, RoundTrip) {
  const FiniteSpace s = fixtures::indiscrete({"a", "b", "c"});
  const AbelianVector v = parse_abelian("2*b - 3*a", s);
  EXPECT_EQ(abelian_to_json(v, s), Json::parse(R"({"a": -3, "b": 2})"));
  EXPECT_EQ(abelian_from_json(abelian_to_json(v, s), s), v);
  EXPECT_THROW(abelian_from_json(Json::parse(R"({"a": 1.5})"), s), SyntaxError);
  EXPECT_THROW(abelian_from_json(Json::parse(R"({"q": 1})"), s), Error);
}

TEST(VerdictJson, Shapes) {
  const FiniteSpace s = fixtures::sierpinski();
  const Json member = verdict_to_json(member_NA(s, parse_abelian("b - a", s)), s);
  EXPECT_EQ(member, Json::parse(R"({"kind":"Member","certificate":[{"from":"a","to":"b","count":1}]})"));

  const Json non = verdict_to_json(member_NA(s, parse_abelian("a - b", s)), s);
  EXPECT_EQ(non["kind"], "NonMember");
  EXPECT_EQ(non["obstruction"]["type"], "AbelianObstruction");
  EXPECT_EQ(non["obstruction"]["open_set"], Json::parse(R"(["b"])"));

  const Json kernel = verdict_to_json(member_NF(s, parse_word("a^-1 b a b^-1", s)), s);
  EXPECT_EQ(kernel["obstruction"]["type"], "KernelCorollary");

  const FiniteSpace ind = fixtures::indiscrete({"x", "y"});
  const Json fp = verdict_to_json(member_NF(ind, parse_word("x^-1 y x y^-1", ind)), ind);
  EXPECT_EQ(fp, Json::parse(R"({"kind":"Member","certificate":[
      {"conjugator":"","from":"x","to":"y"},
      {"conjugator":"x","from":"y","to":"x"}]})"));
}

TEST(ReportJson, TimingIsOptional) {
  SuiteReport r;
  r.carrier_size = 1;
  r.spaces_checked = 1;
  r.wall_time = 0.5;
  EXPECT_FALSE(report_to_json(r).contains("wall_time"));
  EXPECT_TRUE(report_to_json(r, true).contains("wall_time"));
  EXPECT_TRUE(report_to_json(r)["clean"].get<bool>());
  EXPECT_NE(report_to_text(r).find("clean"), std::string::npos);
}

TEST(SeparationJson, Shapes) {
  const FiniteSpace s = fixtures::indiscrete({"x", "y"});
  EXPECT_EQ(separation_to_json(separate_AP(s, {}, parse_abelian("x - y", s)), s), Json::parse(R"({"separable":false})"));
  const FiniteSpace sp = fixtures::sierpinski();
  const Json j = separation_to_json(separate_AP(sp, {}, parse_abelian("a - b", sp)), sp);
  EXPECT_TRUE(j["separable"].get<bool>());
  EXPECT_EQ(j["coset_center"], Json::object());
}

}  // namespace
}  // namespace paratop
