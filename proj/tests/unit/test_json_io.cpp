#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cyclide/json_io.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "json.hpp"

using namespace cyclide;
using namespace cyclide::testing;
using nlohmann::json;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    vector_from_json(text);
  } catch (const DomainError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorKind::InvalidVector;
}

}  // namespace

TEST(VectorJson, CanonicalForm) {
  const auto torus = vec("1", {"1", "0", "-3", "0", "9/2"}, {"-9/2", "0", "0", "0"});
  EXPECT_EQ(vector_to_json(torus), R"({"r":"1","u":["1","0","-3","0","9/2"],"v":["-9/2","0","0","0"]})");
}

TEST(VectorJson, RoundTrip) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const CircleFamilyVector v = random_vector(rng);
    const CircleFamilyVector back = vector_from_json(vector_to_json(v));
    EXPECT_EQ(back, v);
    EXPECT_EQ(vector_to_json(back), vector_to_json(v));
  }
}

TEST(VectorJson, AcceptsUnreducedText) {
  const auto v = vector_from_json(R"({"v":["-2/4","0","0","0"],"r":"2/2","u":["1","0","0","0","0"]})");
  EXPECT_EQ(v.r(), 1);
  EXPECT_EQ(v.v(1), q("-1/2"));
}

TEST(VectorJson, Rejections) {
  const std::string ok_u = R"("u":["1","0","0","0","0"])";
  const std::string ok_v = R"("v":["0","0","0","0"])";
  EXPECT_EQ(kind_of(R"({"r":1,)" + ok_u + "," + ok_v + "}"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"r":"1",)" + ok_u + R"(,"v":[0.5,"0","0","0"]})"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"r":"0.5",)" + ok_u + "," + ok_v + "}"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"r":"1/0",)" + ok_u + "," + ok_v + "}"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"r":"1","w":"2",)" + ok_u + "," + ok_v + "}"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"r":"1",)" + ok_u + "}"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"r":"1","u":["1","0","0","0"],)" + ok_v + "}"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("[1,2]"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("{"), ErrorKind::ParseError);
}

TEST(VectorJson, InvalidRadius) {
  const ErrorKind k = kind_of(R"({"r":"-1","u":["1","0","0","0","0"],"v":["0","0","0","0"]})");
  EXPECT_TRUE(k == ErrorKind::InvalidVector || k == ErrorKind::ParseError);
}

TEST(VectorJson, Files) {
  const auto dir = std::filesystem::temp_directory_path() / "cyclide_json_test";
  std::filesystem::create_directories(dir);
  const auto v = reference_pairs()[5].second;
  write_vector_json(v, dir / "f2.json");
  std::ifstream in(dir / "f2.json");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, vector_to_json(v) + "\n");
  EXPECT_EQ(read_vector_json(dir / "f2.json"), v);

  std::ofstream(dir / "bad.json") << "{\"r\":1}";
  try {
    read_vector_json(dir / "bad.json");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("bad.json"), std::string::npos);
  }
  try {
    read_vector_json(dir / "missing.json");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
    EXPECT_NE(std::string(e.what()).find("missing.json"), std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST(VerdictJson, CarriesWitnesses) {
  const json j = json::parse(verdict_to_json(classify(reference_pairs()[5].first)));
  EXPECT_EQ(j["verdict"], "VillarceauDupin");
  EXPECT_EQ(j["dupin"], true);
  EXPECT_EQ(j["villarceau"]["gap"], "25/169");
  for (const char* k : {"r1", "r2", "r3", "r4"}) EXPECT_EQ(j["villarceau"][k], "0");
  EXPECT_EQ(j["principal"]["minors_m"].size(), 30u);
  EXPECT_EQ(j["degenerate"]["minors_l"].size(), 15u);
  EXPECT_EQ(j["degenerate"]["rank_l"], 2);
}

TEST(ReportJson, QuarticAndCubic) {
  const auto torus = reference_pairs()[1].first;
  const json quartic = json::parse(report_to_json(quartic_dupin_conditions(to_intermediate(torus))));
  EXPECT_EQ(quartic["kind"], "quartic");
  EXPECT_EQ(quartic["all_vanish"], true);
  const auto cubic = vec("1", {"0", "1", "0", "0", "0"}, {"2", "0", "0", "2"});
  const json c = json::parse(report_to_json(cubic_dupin_conditions(expand(cubic))));
  EXPECT_EQ(c["kind"], "cubic");
}

TEST(ErrorJson, Shape) {
  const DomainError e(ErrorKind::NoRealSolution, "no root", {{"discriminant", mpq_class(-3, 4)}});
  const json j = json::parse(error_to_json(e));
  EXPECT_EQ(j["error"], "NoRealSolution");
  EXPECT_EQ(j["message"], "no root");
  EXPECT_EQ(j["details"]["discriminant"], "-3/4");
}
