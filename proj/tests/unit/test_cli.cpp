#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cyclide/json_io.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using namespace cyclide;
using namespace cyclide::testing;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cyclide_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const CircleFamilyVector& v) {
    const fs::path p = dir_ / name;
    write_vector_json(v, p);
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ClassifyPanelF) {
  const Result r = call({"classify", "--in", write("fig2f.json", reference_pairs()[5].first)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.parsed()["verdict"], "VillarceauDupin");
  EXPECT_EQ(r.parsed()["villarceau"]["r4"], "0");
}

TEST_F(CliTest, BlendPanelA) {
  const auto pair = reference_pairs()[0];
  const Result r = call({"blend-check", "--a", write("a1.json", pair.first), "--b", write("a2.json", pair.second)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"blend\":true}\n");
}

TEST_F(CliTest, SolveCylinderPanelD) {
  const Result r = call({"solve-cylinder", "--r", "1", "--u0", "1", "--u2", "0", "--u3", "0", "--u4", "-4"});
  ASSERT_EQ(r.code, 0);
  const json vs = r.parsed()["vectors"];
  ASSERT_EQ(vs.size(), 2u);
  bool found = false;
  for (const auto& v : vs) found |= vector_from_json(v.dump()) == reference_pairs()[3].first;
  EXPECT_TRUE(found);
}

TEST_F(CliTest, SolvePlanePanelE) {
  const Result r = call({"solve-plane", "--r", "1", "--u0", "1", "--u1", "9/5", "--v2", "1", "--v3", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(vector_from_json(r.parsed()["vector"].dump()), reference_pairs()[4].second);
}

TEST_F(CliTest, SolveConePanelA) {
  const Result r =
      call({"solve-cone", "--r", "1", "--lambda", "-1", "--u0", "1", "--u1", "-2", "--u2", "-5", "--u3", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(vector_from_json(r.parsed()["vector"].dump()), reference_pairs()[0].second);
}

TEST_F(CliTest, PencilPanelF) {
  const Result r = call({"pencil", "--in", write("f1.json", reference_pairs()[5].first), "--t", "2/5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(vector_from_json(r.parsed()["vector"].dump()), reference_pairs()[5].second);
}

TEST_F(CliTest, VillarceauCompleteAndInvariant) {
  const Result r = call({"villarceau-complete", "--r", "1", "--u0", "1", "--u1", "0", "--u2", "1", "--u3", "0",
                         "--u4", "12/13"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.parsed()["vectors"].size(), 2u);
  const Result j = call({"invariant", "--in", write("f1.json", reference_pairs()[5].first)});
  EXPECT_EQ(j.out, "{\"J0\":\"25/104\",\"class\":\"smooth\"}\n");
}

TEST_F(CliTest, RecognizeTorus) {
  const Result r = call({"recognize-torus", "--in", write("t.json", reference_pairs()[1].first)});
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(r.parsed()["torus"].is_null());
  const Result c = call({"check-dupin", "--in", write("t2.json", reference_pairs()[1].first)});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.parsed()["all_vanish"], true);
}

TEST_F(CliTest, ExitCodes) {
  // Domain errors exit 2 with residuals attached.
  const Result none = call({"solve-cylinder", "--r", "1", "--u0", "1", "--u2", "0", "--u3", "0", "--u4", "1"});
  EXPECT_EQ(none.code, 2);
  EXPECT_EQ(none.parsed()["error"], "NoRealSolution");
  EXPECT_TRUE(none.parsed()["details"].contains("discriminant"));
  EXPECT_FALSE(none.err.empty());

  const Result mismatch = call({"pencil", "--in", write("torus.json", reference_pairs()[1].first), "--t", "1"});
  EXPECT_EQ(mismatch.code, 2);
  EXPECT_EQ(mismatch.parsed()["error"], "ComponentMismatch");
  EXPECT_TRUE(mismatch.parsed()["details"].contains("gap"));

  const Result not_principal = call({"recognize-torus", "--in", write("f.json", reference_pairs()[5].first)});
  EXPECT_EQ(not_principal.code, 2);
  EXPECT_TRUE(not_principal.parsed()["details"].contains("T2"));

  // Usage errors exit 1.
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({"classify"}).code, 1);
  EXPECT_EQ(call({"classify", "--in", (dir_ / "missing.json").string()}).code, 1);
  const Result decimal =
      call({"solve-plane", "--r", "1", "--u0", "0.5", "--u1", "0", "--v2", "0", "--v3", "0"});
  EXPECT_EQ(decimal.code, 1);
  EXPECT_EQ(decimal.parsed()["error"], "ParseError");
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(CliTest, Deterministic) {
  const std::string in = write("a1.json", reference_pairs()[0].first);
  EXPECT_EQ(call({"classify", "--in", in}).out, call({"classify", "--in", in}).out);
  const std::string obj1 = (dir_ / "m1.obj").string(), obj2 = (dir_ / "m2.obj").string();
  EXPECT_EQ(call({"mesh", "--in", in, "--bbox", "-10,10", "--res", "24", "--out", obj1, "--threads", "1"}).code, 0);
  EXPECT_EQ(call({"mesh", "--in", in, "--bbox", "-10,10", "--res", "24", "--out", obj2, "--threads", "3"}).code, 0);
  std::ifstream a(obj1), b(obj2);
  const std::string ta((std::istreambuf_iterator<char>(a)), {}), tb((std::istreambuf_iterator<char>(b)), {});
  EXPECT_FALSE(ta.empty());
  EXPECT_EQ(ta, tb);
}

TEST_F(CliTest, MeshErrors) {
  const std::string in = write("t.json", reference_pairs()[1].first);
  EXPECT_EQ(call({"mesh", "--in", in, "--res", "4", "--out", (dir_ / "x.obj").string()}).code, 2);
  const Result empty = call({"mesh", "--in", in, "--bbox", "10,11", "--res", "8", "--out", (dir_ / "x.obj").string()});
  EXPECT_EQ(empty.code, 2);
  EXPECT_EQ(empty.parsed()["error"], "EmptySurface");
  EXPECT_EQ(call({"mesh", "--in", in, "--bbox", "1,2,3", "--out", (dir_ / "x.obj").string()}).code, 1);
}

TEST_F(CliTest, DemoFig2) {
  const auto start = std::chrono::steady_clock::now();
  const Result r = call({"demo-fig2", "--out", (dir_ / "fig2").string(), "--res", "32"});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_LT(seconds, 5.0);
  const json panels = r.parsed()["panels"];
  ASSERT_EQ(panels.size(), 6u);
  const auto refs = reference_pairs();
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(panels[i]["blend"], true);
    for (const auto& m : panels[i]["members"]) {
      EXPECT_TRUE(m["verdict"] == "VillarceauDupin" || m["verdict"] == "PrincipalDupin" ||
                  m["verdict"] == "HornBoundary");
    }
    const std::string stem = "fig2" + refs[i].panel;
    EXPECT_EQ(read_vector_json(dir_ / "fig2" / (stem + "-1.json")), refs[i].first);
    EXPECT_EQ(read_vector_json(dir_ / "fig2" / (stem + "-2.json")), refs[i].second);
    EXPECT_TRUE(fs::exists(dir_ / "fig2" / (stem + ".obj")));
  }
}
