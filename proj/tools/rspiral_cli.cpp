// rspiral: construct rational spiral arcs between two curvature elements.
//
//   rspiral check <in.json>
//   rspiral solve <in.json> --out <out.json> [--svg <f.svg>] [--csv <f.csv>]
//   rspiral clothoid --from <s0> --to <s1> --margin <m> --out <dir>
//
// Log verbosity is read from RSPIRAL_LOG (trace, debug, info, warn, error, off).

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "rspiral/io.hpp"

namespace {

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("rspiral");
  logger->set_level(spdlog::level::warn);
  if (const char* level = std::getenv("RSPIRAL_LOG")) {
    logger->set_level(spdlog::level::from_str(level));
  }
  spdlog::set_default_logger(logger);
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  namespace io = rspiral::io;

  CLI::App app{"Spiral arcs with prescribed end tangents and curvatures"};
  app.require_subcommand(1);

  std::string check_input;
  auto* check = app.add_subcommand("check", "Classify the problem in a JSON document");
  check->add_option("input", check_input, "Problem document")->required();

  io::SolvePaths solve_paths;
  std::string solve_input, solve_out, solve_svg, solve_csv;
  auto* solve = app.add_subcommand("solve", "Construct both spiral solutions");
  solve->add_option("input", solve_input, "Problem document")->required();
  solve->add_option("--out", solve_out, "Solution document")->required();
  solve->add_option("--svg", solve_svg, "SVG drawing of the solutions");
  solve->add_option("--csv", solve_csv, "Curvature profiles as CSV");

  io::ClothoidArgs clothoid_args;
  std::string clothoid_out;
  auto* clothoid = app.add_subcommand("clothoid", "Approximate a unit clothoid by spiral spans");
  clothoid->add_option("--from", clothoid_args.from, "Start arc length")->required();
  clothoid->add_option("--to", clothoid_args.to, "End arc length")->required();
  clothoid->add_option("--margin", clothoid_args.margin, "Fraction of the longest solvable span")
      ->default_val(0.99);
  clothoid->add_option("--out", clothoid_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : io::exit_code::kParseError;
  }

  if (*check) {
    spdlog::debug("check {}", check_input);
    return io::cmd_check(check_input, std::cout, std::cerr);
  }
  if (*solve) {
    solve_paths.input = solve_input;
    solve_paths.output = solve_out;
    if (!solve_svg.empty()) solve_paths.svg = solve_svg;
    if (!solve_csv.empty()) solve_paths.csv = solve_csv;
    spdlog::debug("solve {} -> {}", solve_input, solve_out);
    return io::cmd_solve(solve_paths, std::cout, std::cerr);
  }
  clothoid_args.out_dir = clothoid_out;
  spdlog::debug("clothoid [{}, {}] margin {}", clothoid_args.from, clothoid_args.to,
                clothoid_args.margin);
  return io::cmd_clothoid(clothoid_args, std::cout, std::cerr);
}
