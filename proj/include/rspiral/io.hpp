#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rspiral/clothoid_bench.hpp"
#include "rspiral/errors.hpp"
#include "rspiral/spiral_solver.hpp"

namespace rspiral::io {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class AngleUnit { Degrees, Radians };

struct OutputSelection {
  bool polyline = true;
  bool profile = true;
  bool coefficients = true;
};

struct ProblemOptions {
  AngleUnit angle_unit = AngleUnit::Radians;
  int samples = 256;
  OutputSelection output;
};

/// Input of `check` and `solve`. Angles are stored in radians after parsing.
struct ProblemDocument {
  CurvatureElement start;
  CurvatureElement end;
  ProblemOptions options;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kNoSpiral = 2;
inline constexpr int kBiarcOnly = 3;
inline constexpr int kNoShortSpiral = 4;
inline constexpr int kMethodNotApplicable = 5;
inline constexpr int kParseError = 64;
inline constexpr int kIoError = 74;
}  // namespace exit_code

int exit_code_for(Solvability tag);
std::string_view describe(Solvability tag);

/// Decimal text with 17 significant digits, which round-trips any double.
std::string format_number(double value);
/// Accepts a JSON number or a decimal string written by format_number.
double read_number(const Json& value, std::string_view what);

/// Strict parse: unknown keys are rejected and options.angle_unit is required.
ProblemDocument parse_problem(const Json& doc);
ProblemDocument parse_problem_text(const std::string& text);

/// Full solution document; classification failures give an error document
/// with an empty "solutions" array.
Json solution_document(const SolveOutcome& outcome, const ProblemOptions& options);

/// World-space polylines rebuilt from the stored frame and the rational Bezier
/// form, or the monomial coefficients when the former is absent.
std::vector<std::vector<Point2>> reevaluate_polylines(const Json& solution_doc);
/// World-space polylines exactly as stored.
std::vector<std::vector<Point2>> stored_polylines(const Json& solution_doc);

/// Chord, parabola control polygons, both curves and the dashed lense.
std::string render_solution_svg(const SolveOutcome& outcome, int samples = 256);

/// Columns: solution,t,s,k.
std::string curvature_csv(const SolveOutcome& outcome, int samples);

Json clothoid_report(const ClothoidApproximation& approx, double margin);
/// Columns: s,k_clothoid,k_solution1,k_solution2; samples matched by arc-length fraction.
std::string clothoid_csv(const ClothoidApproximation& approx, int samples_per_span = 64);
std::string render_clothoid_svg(const ClothoidApproximation& approx, int samples = 256);

/// `check <in.json>`: prints the classification report; returns the exit code.
int cmd_check(const std::filesystem::path& input, std::ostream& out, std::ostream& err);

struct SolvePaths {
  std::filesystem::path input;
  std::filesystem::path output;
  std::optional<std::filesystem::path> svg;
  std::optional<std::filesystem::path> csv;
};
int cmd_solve(const SolvePaths& paths, std::ostream& out, std::ostream& err);

struct ClothoidArgs {
  double from = 0.0;
  double to = 6.0;
  double margin = 0.99;
  std::filesystem::path out_dir;
};
int cmd_clothoid(const ClothoidArgs& args, std::ostream& out, std::ostream& err);

}  // namespace rspiral::io
