#include <gtest/gtest.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "rspiral/io.hpp"

using namespace rspiral;
using namespace rspiral::io;

namespace {

namespace fs = std::filesystem;

const char* kWorkedDeg = R"({
  "start": {"x": -1, "y": 0, "tau": -180, "k": 2.5},
  "end": {"x": 1, "y": 0, "tau": 120, "k": 0.5},
  "options": {"angle_unit": "deg", "samples": 64}
})";

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("rspiral_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string problem_json(const CurvatureElement& a, const CurvatureElement& b, int samples = 64) {
  Json doc;
  doc["start"] = {{"x", format_number(a.x)}, {"y", format_number(a.y)},
                  {"tau", format_number(a.tau)}, {"k", format_number(a.k)}};
  doc["end"] = {{"x", format_number(b.x)}, {"y", format_number(b.y)},
                {"tau", format_number(b.tau)}, {"k", format_number(b.k)}};
  doc["options"] = {{"angle_unit", "rad"}, {"samples", samples}};
  return doc.dump();
}

bool valid_number(const std::string& tok) {
  // [+-]? (digits [. digits?] | . digits) ([eE] [+-]? digits)?
  std::size_t i = 0;
  auto digits = [&] {
    const std::size_t start = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    return i > start;
  };
  if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
  const bool whole = digits();
  bool frac = false;
  if (i < tok.size() && tok[i] == '.') {
    ++i;
    frac = digits();
  }
  if (!whole && !frac) return false;
  if (i < tok.size() && (tok[i] == 'e' || tok[i] == 'E')) {
    ++i;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
    if (!digits()) return false;
  }
  return i == tok.size();
}

// Accepts "M x y (L x y | M x y)*".
bool valid_path_data(const std::string& d) {
  std::istringstream in(d);
  std::string tok;
  bool first = true;
  while (in >> tok) {
    if (tok != "M" && tok != "L") return false;
    if (first && tok != "M") return false;
    first = false;
    std::string x, y;
    if (!(in >> x >> y)) return false;
    if (!valid_number(x) || !valid_number(y)) return false;
  }
  return !first;
}

// Minimal structural check of an SVG document; returns the number of paths.
int check_svg(const std::string& svg) {
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\""), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const std::string open = "<path d=\"";
  int paths = 0;
  for (std::size_t at = svg.find(open); at != std::string::npos; at = svg.find(open, at + 1)) {
    const std::size_t begin = at + open.size();
    const std::size_t end = svg.find('"', begin);
    EXPECT_NE(end, std::string::npos);
    const std::string d = svg.substr(begin, end - begin);
    EXPECT_TRUE(valid_path_data(d)) << d.substr(0, 80);
    EXPECT_NE(svg.find("/>", end), std::string::npos);
    ++paths;
  }
  EXPECT_EQ(paths, static_cast<int>(std::count(svg.begin(), svg.end(), '<')) - 3);
  return paths;
}

std::vector<std::string> csv_rows(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  return rows;
}

}  // namespace

TEST(PathGrammar, Checker) {
  EXPECT_TRUE(valid_path_data("M 0 0 L 1.5 -2e-3"));
  EXPECT_TRUE(valid_path_data("M 0 0 L 1 1 M 2 2 L 3 3"));
  EXPECT_FALSE(valid_path_data("L 0 0"));
  EXPECT_FALSE(valid_path_data("M 0"));
  EXPECT_FALSE(valid_path_data("M nan 0"));
  EXPECT_FALSE(valid_path_data(""));
}

TEST(Numbers, RoundTrip) {
  for (double v : {0.1, -1.0 / 3.0, 6.02214076e23, 5e-324, -0.0}) {
    EXPECT_EQ(read_number(Json(format_number(v)), "v"), v);
  }
  EXPECT_EQ(read_number(Json(2.5), "v"), 2.5);
  EXPECT_THROW(read_number(Json("1.5x"), "v"), ParseError);
  EXPECT_THROW(read_number(Json("inf"), "v"), ParseError);
  EXPECT_THROW(read_number(Json(true), "v"), ParseError);
}

TEST(ParseProblem, Strict) {
  EXPECT_NO_THROW(parse_problem_text(kWorkedDeg));
  EXPECT_THROW(parse_problem_text("{"), ParseError);
  EXPECT_THROW(parse_problem_text(R"({"start": {"x": 0, "y": 0, "tau": 0, "k": 0},
    "end": {"x": 1, "y": 0, "tau": 0, "k": 0}, "options": {}})"),
               ParseError);
  EXPECT_THROW(parse_problem_text(R"({"start": {"x": 0, "y": 0, "tau": 0, "k": 0, "z": 1},
    "end": {"x": 1, "y": 0, "tau": 0, "k": 0}, "options": {"angle_unit": "rad"}})"),
               ParseError);
  EXPECT_THROW(parse_problem_text(R"({"start": {"x": 0, "y": 0, "tau": 0, "k": 0},
    "end": {"x": 1, "y": 0, "tau": 0, "k": 0}, "options": {"angle_unit": "grad"}})"),
               ParseError);
  EXPECT_THROW(parse_problem_text(R"({"start": {"x": 0, "y": 0, "tau": 0, "k": 0},
    "end": {"x": 1, "y": 0, "tau": 0}, "options": {"angle_unit": "rad"}})"),
               ParseError);
  EXPECT_THROW(parse_problem_text(R"({"start": {"x": 0, "y": 0, "tau": 0, "k": 0},
    "end": {"x": 1, "y": 0, "tau": 0, "k": 0}, "options": {"angle_unit": "rad", "samples": 1}})"),
               ParseError);
  EXPECT_THROW(parse_problem_text(R"({"start": {"x": 0, "y": 0, "tau": 0, "k": 0},
    "end": {"x": 1, "y": 0, "tau": 0, "k": 0}, "options": {"angle_unit": "rad", "output": ["svg"]}})"),
               ParseError);
}

TEST(ParseProblem, DegreesAndRadiansAgree) {
  const auto deg = parse_problem_text(kWorkedDeg);
  const auto rad = parse_problem_text(problem_json(deg.start, deg.end));
  EXPECT_EQ(deg.start.tau, rad.start.tau);
  EXPECT_EQ(deg.end.tau, rad.end.tau);
  ProblemOptions opts_deg = deg.options;
  opts_deg.angle_unit = AngleUnit::Radians;
  const auto a = solution_document(solve_g2_hermite(deg.start, deg.end), opts_deg);
  const auto b = solution_document(solve_g2_hermite(rad.start, rad.end), rad.options);
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(CmdCheck, WorkedExample) {
  TempDir dir;
  write(dir / "in.json", kWorkedDeg);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_check(dir / "in.json", out, err), exit_code::kOk);
  EXPECT_EQ(out.str().rfind("Solvable", 0), 0u);
  EXPECT_NE(out.str().find("Q = -0.66506"), std::string::npos);
  EXPECT_NE(out.str().find("(-60"), std::string::npos);
}

TEST(CmdCheck, NoSpiralMessage) {
  TempDir dir;
  write(dir / "in.json", problem_json({-1, 0, 0.5, 1.0}, {1, 0, 0.5, 1.0}));
  std::ostringstream out, err;
  EXPECT_EQ(cmd_check(dir / "in.json", out, err), exit_code::kNoSpiral);
  EXPECT_EQ(out.str().rfind("NoSpiral: no such spiral exists", 0), 0u);
}

TEST(CmdCheck, ExitCodesPerClass) {
  TempDir dir;
  std::ostringstream out, err;
  write(dir / "short.json", problem_json({1, 0, std::numbers::pi / 2, 1.0}, {0, 4, std::numbers::pi, 0.25}));
  EXPECT_EQ(cmd_check(dir / "short.json", out, err), exit_code::kNoShortSpiral);
  // Q just below zero with sigma = 60 degrees lies above q_max.
  write(dir / "na.json", problem_json({-1, 0, 0.0, 1.5}, {1, 0, std::numbers::pi / 3, 1.0}));
  const auto cls = classify(normalize_to_chord({-1, 0, 0.0, 1.5}, {1, 0, std::numbers::pi / 3, 1.0}).problem);
  EXPECT_EQ(cmd_check(dir / "na.json", out, err), exit_code_for(cls.tag));
  EXPECT_EQ(exit_code_for(Solvability::BiarcOnly), 3);
  EXPECT_EQ(exit_code_for(Solvability::MethodNotApplicable), 5);
}

TEST(CmdCheck, ParseErrors) {
  TempDir dir;
  std::ostringstream out, err;
  write(dir / "bad.json", "{ not json");
  EXPECT_EQ(cmd_check(dir / "bad.json", out, err), exit_code::kParseError);
  write(dir / "same.json", problem_json({1, 1, 0, 0}, {1, 1, 0, 1}));
  EXPECT_EQ(cmd_check(dir / "same.json", out, err), exit_code::kParseError);
  EXPECT_EQ(cmd_check(dir / "missing.json", out, err), exit_code::kIoError);
}

TEST(CmdSolve, WorkedExampleDocument) {
  TempDir dir;
  write(dir / "in.json", kWorkedDeg);
  std::ostringstream out, err;
  ASSERT_EQ(cmd_solve({dir / "in.json", dir / "out.json", dir / "out.svg", dir / "out.csv"}, out,
                      err),
            exit_code::kOk);
  const Json doc = Json::parse(read(dir / "out.json"));
  EXPECT_EQ(doc["classification"], "Solvable");
  ASSERT_EQ(doc["solutions"].size(), 2u);
  bool found = false;
  for (const Json& sol : doc["solutions"]) {
    const double p = read_number(sol["control_point"]["p"], "p");
    const double q = read_number(sol["control_point"]["q"], "q");
    if (std::abs(p + 0.8845) < 5e-4 && std::abs(q + 0.3033) < 5e-4) found = true;
    EXPECT_TRUE(sol.contains("bezier"));
    EXPECT_EQ(sol["polyline"].size(), 64u);
    EXPECT_EQ(sol["profile"].size(), 64u);
  }
  EXPECT_TRUE(found);
  check_svg(read(dir / "out.svg"));
  const auto rows = csv_rows(read(dir / "out.csv"));
  ASSERT_EQ(rows.size(), 1u + 2u * 64u);
  EXPECT_EQ(rows[0], "solution,t,s,k");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(std::count(rows[i].begin(), rows[i].end(), ','), 3);
  }
}

TEST(CmdSolve, FailureGivesErrorDocument) {
  TempDir dir;
  write(dir / "in.json", problem_json({-1, 0, 0.5, 1.0}, {1, 0, 0.5, 1.0}));
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve({dir / "in.json", dir / "out.json", dir / "out.svg", std::nullopt}, out, err),
            exit_code::kNoSpiral);
  const Json doc = Json::parse(read(dir / "out.json"));
  EXPECT_EQ(doc["classification"], "NoSpiral");
  EXPECT_EQ(doc["message"], "no such spiral exists");
  EXPECT_TRUE(doc["solutions"].empty());
  EXPECT_TRUE(doc["diagnostics"]["quartic_residual"].is_null());
  EXPECT_FALSE(fs::exists(dir / "out.svg"));
}

TEST(CmdSolve, Deterministic) {
  TempDir dir;
  write(dir / "in.json", kWorkedDeg);
  std::ostringstream out, err;
  ASSERT_EQ(cmd_solve({dir / "in.json", dir / "a.json", std::nullopt, dir / "a.csv"}, out, err), 0);
  ASSERT_EQ(cmd_solve({dir / "in.json", dir / "b.json", std::nullopt, dir / "b.csv"}, out, err), 0);
  EXPECT_EQ(read(dir / "a.json"), read(dir / "b.json"));
  EXPECT_EQ(read(dir / "a.csv"), read(dir / "b.csv"));
}

TEST(SolutionDocument, ReevaluationReproducesPolyline) {
  for (const auto& pr : oracle::random_solvable_problems(300, 61)) {
    const auto doc = parse_problem_text(problem_json(pr.start, pr.end, 33));
    const auto outcome = solve_g2_hermite(doc.start, doc.end);
    const Json written = Json::parse(solution_document(outcome, doc.options).dump(2));
    const auto stored = stored_polylines(written);
    const auto again = reevaluate_polylines(written);
    const double c = outcome.chord.frame.c;
    const double scale = std::max(c, std::hypot(outcome.chord.frame.origin.x,
                                                outcome.chord.frame.origin.y));
    ASSERT_EQ(stored.size(), 2u);
    ASSERT_EQ(again.size(), 2u);
    for (int j = 0; j < 2; ++j) {
      ASSERT_EQ(stored[j].size(), 33u);
      for (std::size_t i = 0; i < stored[j].size(); ++i) {
        EXPECT_LE(std::hypot(stored[j][i].x - again[j][i].x, stored[j][i].y - again[j][i].y),
                  1e-9 * scale);
      }
    }
  }
}

TEST(SolutionDocument, MonomialFallback) {
  const auto outcome = solve_g2_hermite({-1, 0, -std::numbers::pi, 2.5},
                                        {1, 0, 2 * std::numbers::pi / 3, 0.5});
  Json doc = solution_document(outcome, {});
  for (Json& sol : doc["solutions"]) sol.erase("bezier");
  const auto stored = stored_polylines(doc);
  const auto again = reevaluate_polylines(doc);
  for (int j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < stored[j].size(); ++i) {
      EXPECT_LE(std::hypot(stored[j][i].x - again[j][i].x, stored[j][i].y - again[j][i].y), 1e-9);
    }
  }
}

TEST(SolutionDocument, OutputSelection) {
  ProblemOptions opts;
  opts.output = {false, false, true};
  const auto outcome = solve_g2_hermite({-1, 0, -std::numbers::pi, 2.5},
                                        {1, 0, 2 * std::numbers::pi / 3, 0.5});
  const Json doc = solution_document(outcome, opts);
  for (const Json& sol : doc["solutions"]) {
    EXPECT_FALSE(sol.contains("polyline"));
    EXPECT_FALSE(sol.contains("profile"));
    EXPECT_TRUE(sol.contains("coefficients"));
    EXPECT_TRUE(sol["moebius"].contains("z0"));
  }
}

TEST(Svg, InfiniteLenseArcsStayValid) {
  // beta near pi/2 sends one lense arc through infinity.
  for (const auto& pr : oracle::random_solvable_problems(40, 62)) {
    check_svg(render_solution_svg(solve_g2_hermite(pr.start, pr.end), 64));
  }
}

TEST(CmdClothoid, Outputs) {
  TempDir dir;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_clothoid({0.0, 6.0, 0.99, dir / "c"}, out, err), exit_code::kOk);
  const Json report = Json::parse(read(dir / "c" / "report.json"));
  EXPECT_EQ(report["format"], "rspiral.clothoid.v1");
  EXPECT_LE(report["span_count"].get<int>(), 10);
  EXPECT_EQ(report["breakpoints"].size(), report["span_count"].get<std::size_t>() + 1);
  const auto rows = csv_rows(read(dir / "c" / "curvature.csv"));
  EXPECT_EQ(rows[0], "s,k_clothoid,k_solution1,k_solution2");
  EXPECT_EQ(rows.size(), 1u + 64u * report["span_count"].get<std::size_t>());
  check_svg(read(dir / "c" / "approximation.svg"));
}

TEST(CmdClothoid, BadRange) {
  TempDir dir;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_clothoid({3.0, 1.0, 0.99, dir / "c"}, out, err), exit_code::kParseError);
  EXPECT_EQ(cmd_clothoid({0.0, 1.0, 0.0, dir / "c"}, out, err), exit_code::kParseError);
}
