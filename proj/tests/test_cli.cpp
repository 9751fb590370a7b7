#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "rqs/cli.hpp"
#include "rqs/generators.hpp"

using namespace rqs;
using io::json;

namespace {

std::string error_of(const std::string& text) {
  try {
    io::parse_document(text);
  } catch (const io::InputError& e) {
    return e.what();
  }
  return "";
}

cli::SolveOptions opts(const std::string& problem, const std::string& backend = "rqs") {
  cli::SolveOptions o;
  o.problem = problem;
  o.backend = backend;
  o.seed = 4;
  return o;
}

json lines_doc(const std::vector<geom::ExactLine>& lines) {
  json doc = {{"format", 1}};
  doc["lines"] = json::array();
  for (const auto& l : lines) doc["lines"].push_back({io::rat_json(l.a()), io::rat_json(l.b()), io::rat_json(l.c())});
  return doc;
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "rqs_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Parse, ReportsLineAndColumn) {
  EXPECT_EQ(error_of("{\"format\": 1,\n  \"lines\": [[1, 1, 0],, ]}"), "line 2, column 23: malformed JSON");
  EXPECT_EQ(error_of("{\n\n   oops"), "line 3, column 4: malformed JSON");
  EXPECT_EQ(error_of("{\"lines\": []}"), "expected \"format\": 1");
  EXPECT_EQ(error_of("{\"format\": 2}"), "expected \"format\": 1");
}

TEST(Parse, Numbers) {
  EXPECT_EQ(io::rat_of(json("-1/7")), geom::Rat(-1, 7));
  EXPECT_EQ(io::rat_of(json("0.125")), geom::Rat(1, 8));
  EXPECT_EQ(io::rat_of(json(12)), geom::Rat(12));
  EXPECT_THROW(io::rat_of(json(0.5)), io::InputError);
  EXPECT_THROW(io::rat_of(json("1/0x")), io::InputError);
  EXPECT_DOUBLE_EQ(io::real_of(json("2.5")), 2.5);
  EXPECT_THROW(io::real_of(json("2.5m")), io::InputError);
}

TEST(Solve, ExitCodesForBadInput) {
  auto doc = io::parse_document(R"({"format": 1, "lines": [[1, 1]]})");
  auto o = cli::run_solve(opts("p3l"), doc);
  EXPECT_EQ(o.code, 1);
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(o.err.find("[a, b, c]"), std::string::npos);

  doc = io::parse_document(R"({"format": 1, "lines": [[0, 0, 1], [1, 0, 0], [0, 1, 0]]})");
  EXPECT_EQ(cli::run_solve(opts("p3l"), doc).code, 1);  // 0 = 1 is no line
  EXPECT_EQ(cli::run_solve(opts("hexagons"), doc).code, 1);
  auto bad = opts("p3l");
  bad.epsilon = 1.5;
  EXPECT_EQ(cli::run_solve(bad, lines_doc({geom::ExactLine(1, 0, 0)})).code, 1);

  auto missing = opts("p3l");
  missing.input = (scratch() / "does_not_exist.json").string();
  auto m = cli::run_solve(missing);
  EXPECT_EQ(m.code, 1);
  EXPECT_NE(m.err.find("cannot open"), std::string::npos);
}

TEST(Solve, BackendsAgreeOnLines) {
  Rng rng(3);
  for (int t = 0; t < 6; ++t) {
    auto lines = t % 2 ? gen::planted_concurrence(20, rng) : gen::random_lines(20, rng);
    auto doc = lines_doc(lines);
    auto a = json::parse(cli::run_solve(opts("p3l"), doc).out);
    auto b = json::parse(cli::run_solve(opts("p3l", "bruteforce"), doc).out);
    EXPECT_EQ(a["decision"], b["decision"]) << t;
    EXPECT_EQ(a["decision"], t % 2 == 1);
    if (a["decision"] == true) {
      EXPECT_EQ(a["verified"], true);
      EXPECT_EQ(b["verified"], true);
      EXPECT_EQ(a["witness"]["kind"], "point");
    } else {
      EXPECT_TRUE(a["witness"].is_null());
      EXPECT_TRUE(a["verified"].is_null());
    }
    EXPECT_TRUE(b["params"].is_null());
    EXPECT_FALSE(a["params"].is_null());
  }
}

TEST(Solve, EveryProblemRuns) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"triangle", R"({"format": 1, "area_bound": "1/2", "points": [[0, 0], [1, 0], [0, 1], [5, 5]]})"},
      {"disk", R"({"format": 1, "depth_target": 2, "points": [[0, 0], [1.5, 0], [9, 9]]})"},
      {"intervals", R"({"format": 1, "P": [["0", "1"]], "Q": [["5", "7"]]})"},
      {"pair", R"({"format": 1, "n": 6, "marked": [[4, 1]]})"},
      {"polygon-cut", R"({"format": 1, "edge": 3, "pieces": 3, "vertices": [[0, 0], [11, 0], [11, 4], [10, 4], [10, 1],
          [6, 1], [6, 4], [5, 4], [5, 1], [1, 1], [1, 4], [0, 4]]})"},
      {"disjoint-proj", R"({"format": 1, "polygons": [[[0, 0], [2, 0], [1, 2]], [[5, 0], [7, 0], [6, 2]]]})"},
  };
  for (const auto& [problem, text] : cases) {
    const auto doc = io::parse_document(text);
    auto a = cli::run_solve(opts(problem), doc);
    auto b = cli::run_solve(opts(problem, "bruteforce"), doc);
    ASSERT_EQ(a.code, 0) << problem << a.err;
    ASSERT_EQ(b.code, 0) << problem << b.err;
    const auto ja = json::parse(a.out), jb = json::parse(b.out);
    EXPECT_EQ(ja["decision"], true) << problem;
    EXPECT_EQ(jb["decision"], true) << problem;
    EXPECT_EQ(ja["verified"], true) << problem;
  }
}

TEST(Solve, Overrides) {
  const auto doc = io::parse_document(R"({"format": 1, "area_bound": "1/2", "points": [[0, 0], [2, 0], [0, 2], [9, 7]]})");
  auto o = opts("triangle");
  EXPECT_EQ(json::parse(cli::run_solve(o, doc).out)["decision"], false);
  o.area_bound = "2";
  EXPECT_EQ(json::parse(cli::run_solve(o, doc).out)["decision"], true);

  const auto disks = io::parse_document(R"({"format": 1, "depth_target": 1, "points": [[0, 0], [1.5, 0]]})");
  auto d = opts("disk", "bruteforce");
  d.depth_target = 3;
  EXPECT_EQ(json::parse(cli::run_solve(d, disks).out)["decision"], false);
}

TEST(Solve, ByteIdenticalRepeats) {
  Rng rng(8);
  auto doc = lines_doc(gen::planted_concurrence(40, rng));
  const auto first = cli::run_solve(opts("p3l"), doc).out;
  EXPECT_EQ(first, cli::run_solve(opts("p3l"), doc).out);
  EXPECT_EQ(first.back(), '\n');
}

TEST(Solve, WritesPicture) {
  Rng rng(2);
  auto o = opts("p3l");
  o.emit_svg = (scratch() / "lines.svg").string();
  ASSERT_EQ(cli::run_solve(o, lines_doc(gen::random_lines(12, rng))).code, 0);
  std::ifstream f(*o.emit_svg);
  std::string head;
  std::getline(f, head);
  EXPECT_EQ(head.rfind("<svg", 0), 0u);

  auto p = opts("pair");
  p.emit_svg = (scratch() / "pair.svg").string();
  EXPECT_EQ(cli::run_solve(p, io::parse_document(R"({"format": 1, "n": 3, "marked": []})")).code, 1);
}

TEST(Experiment, RejectsBadArguments) {
  cli::ExperimentOptions e;
  e.experiment = "conc-grid";
  e.trials = 0;
  EXPECT_EQ(cli::run_experiment(e).code, 1);
  e.trials = 2;
  e.experiment = "conc-cubes";
  EXPECT_EQ(cli::run_experiment(e).code, 1);
  e.experiment = "cost-scaling";
  e.sizes = {16, 32};
  EXPECT_EQ(cli::run_experiment(e).code, 1);
}

TEST(Experiment, WritesBothFiles) {
  cli::ExperimentOptions e;
  e.experiment = "conc-grid";
  e.n = 60;
  e.k = 10;
  e.trials = 3;
  e.out = (scratch() / "grid").string();
  const auto o = cli::run_experiment(e);
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out.rfind("conc-grid n=60 k=10 d=2 ", 0), 0u) << o.out;
  EXPECT_TRUE(std::filesystem::exists(*e.out + ".json"));
  EXPECT_TRUE(std::filesystem::exists(*e.out + ".csv"));
}

TEST(Solve, ExhaustedExitsWithTwo) {
  Rng rng(12);
  auto o = opts("p3l");
  o.delta = 0.001;  // every region is oversize
  const auto r = cli::run_solve(o, lines_doc(gen::random_lines(150, rng)));
  EXPECT_EQ(r.code, 2);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["exhausted"], true);
  EXPECT_EQ(j["decision"], false);
}
