#include "rspiral/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "rspiral/analysis.hpp"

namespace rspiral::io {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

void reject_unknown_keys(const Json& obj, std::string_view where,
                         std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ParseError(std::string(where) + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError("unknown field '" + key + "' in " + std::string(where));
    }
  }
}

const Json& require(const Json& obj, const char* key, std::string_view where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError("missing field '" + std::string(key) + "' in " + std::string(where));
  }
  return *it;
}

CurvatureElement parse_element(const Json& obj, std::string_view where, double angle_scale) {
  reject_unknown_keys(obj, where, {"x", "y", "tau", "k"});
  CurvatureElement e;
  e.x = read_number(require(obj, "x", where), "x");
  e.y = read_number(require(obj, "y", where), "y");
  e.tau = read_number(require(obj, "tau", where), "tau") * angle_scale;
  e.k = read_number(require(obj, "k", where), "k");
  return e;
}

Json point_json(Point2 p) { return Json::array({format_number(p.x), format_number(p.y)}); }

Json poly_json(const Poly4& poly) {
  Json arr = Json::array();
  for (double c : poly.c) arr.push_back(format_number(c));
  return arr;
}

Poly4 read_poly(const Json& arr) {
  if (!arr.is_array() || arr.size() != 5) throw ParseError("polynomial needs 5 coefficients");
  Poly4 poly;
  for (std::size_t i = 0; i < 5; ++i) poly.c[i] = read_number(arr[i], "coefficient");
  return poly;
}

// Homogeneous control points (w x, w y, w); the monomial form loses digits
// when the end weights differ by orders of magnitude.
Json bezier_json(const RationalBezier& rb) {
  Json arr = Json::array();
  for (std::size_t k = 0; k < 5; ++k) {
    arr.push_back(Json::array({format_number(rb.weighted[k].x), format_number(rb.weighted[k].y),
                               format_number(rb.weights[k])}));
  }
  return arr;
}

RationalBezier read_bezier(const Json& arr) {
  if (!arr.is_array() || arr.size() != 5) throw ParseError("bezier needs 5 control points");
  RationalBezier rb;
  for (std::size_t k = 0; k < 5; ++k) {
    const Json& h = arr[k];
    if (!h.is_array() || h.size() != 3) throw ParseError("bezier control point needs 3 entries");
    rb.weighted[k] = {read_number(h[0], "bezier"), read_number(h[1], "bezier")};
    rb.weights[k] = read_number(h[2], "bezier");
    rb.points[k] = {rb.weighted[k].x / rb.weights[k], rb.weighted[k].y / rb.weights[k]};
  }
  return rb;
}

ChordFrame read_frame(const Json& obj) {
  ChordFrame frame;
  frame.c = read_number(require(obj, "c", "frame"), "c");
  frame.mu = read_number(require(obj, "mu", "frame"), "mu");
  const Json& origin = require(obj, "origin", "frame");
  frame.origin = {read_number(origin.at(0), "origin"), read_number(origin.at(1), "origin")};
  return frame;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

// Collects world-space polylines and writes them with y pointing up.
class SvgCanvas {
 public:
  void add(std::vector<Point2> points, std::string style, bool bounding = true) {
    if (bounding) {
      for (const Point2& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
        lo_.x = std::min(lo_.x, p.x);
        lo_.y = std::min(lo_.y, p.y);
        hi_.x = std::max(hi_.x, p.x);
        hi_.y = std::max(hi_.y, p.y);
      }
    }
    paths_.push_back({std::move(points), std::move(style)});
  }

  std::string render() const {
    const double span = std::max({hi_.x - lo_.x, hi_.y - lo_.y, 1e-9});
    const double pad = 0.05 * span;
    const double x0 = lo_.x - pad;
    const double y0 = -(hi_.y + pad);
    const double w = hi_.x - lo_.x + 2.0 * pad;
    const double h = hi_.y - lo_.y + 2.0 * pad;
    const double stroke = 0.004 * span;
    // Points this far outside the view are dropped (arcs through infinity).
    const double clip = 1.5 * span;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fixed(x0) +
           " " + fixed(y0) + " " + fixed(w) + " " + fixed(h) + "\">\n";
    for (const auto& [points, style] : paths_) {
      std::string d;
      bool pen_down = false;
      for (const Point2& p : points) {
        const bool visible = std::isfinite(p.x) && std::isfinite(p.y) &&
                             p.x > lo_.x - clip && p.x < hi_.x + clip && p.y > lo_.y - clip &&
                             p.y < hi_.y + clip;
        if (!visible) {
          pen_down = false;
          continue;
        }
        d += pen_down ? " L " : (d.empty() ? "M " : " M ");
        d += fixed(p.x) + " " + fixed(-p.y);
        pen_down = true;
      }
      if (d.empty()) continue;
      out += "  <path d=\"" + d + "\" fill=\"none\" stroke-width=\"" + fixed(stroke) + "\" " +
             scale_dashes(style, stroke) + "/>\n";
    }
    out += "</svg>\n";
    return out;
  }

 private:
  // Dash lengths in styles are given in stroke widths.
  static std::string scale_dashes(const std::string& style, double stroke) {
    const std::string key = "stroke-dasharray=\"";
    const auto at = style.find(key);
    if (at == std::string::npos) return style;
    const auto begin = at + key.size();
    const auto end = style.find('"', begin);
    std::istringstream in(style.substr(begin, end - begin));
    std::string dashes;
    for (double v; in >> v;) dashes += (dashes.empty() ? "" : " ") + fixed(v * stroke);
    return style.substr(0, begin) + dashes + style.substr(end);
  }

  static std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
  }

  struct Path {
    std::vector<Point2> points;
    std::string style;
  };
  std::vector<Path> paths_;
  Point2 lo_{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 hi_{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
};

std::vector<Point2> sample_curve(const RationalSpiralArc& curve, int samples) {
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) pts.push_back(curve.point(static_cast<double>(i) / (samples - 1)));
  return pts;
}

const char* kCurveStyles[] = {"stroke=\"#c0392b\"", "stroke=\"#2471a3\""};

}  // namespace

int exit_code_for(Solvability tag) {
  switch (tag) {
    case Solvability::Solvable:
      return exit_code::kOk;
    case Solvability::NoSpiral:
      return exit_code::kNoSpiral;
    case Solvability::BiarcOnly:
      return exit_code::kBiarcOnly;
    case Solvability::NoShortSpiral:
      return exit_code::kNoShortSpiral;
    case Solvability::MethodNotApplicable:
      return exit_code::kMethodNotApplicable;
  }
  return exit_code::kMethodNotApplicable;
}

std::string_view describe(Solvability tag) {
  switch (tag) {
    case Solvability::NoSpiral:
      return "no such spiral exists";
    case Solvability::BiarcOnly:
      return "the biarc is the unique spiral (not constructed)";
    case Solvability::NoShortSpiral:
      return "no short spiral exists";
    case Solvability::MethodNotApplicable:
      return "boundary circles too close to tangency for the parabola inversion method";
    case Solvability::Solvable:
      return "two short spirals constructed";
  }
  return "";
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

double read_number(const Json& value, std::string_view what) {
  double v = 0.0;
  if (value.is_number()) {
    v = value.get<double>();
  } else if (value.is_string()) {
    const std::string& text = value.get_ref<const std::string&>();
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) {
      throw ParseError("field '" + std::string(what) + "' is not a number: " + text);
    }
  } else {
    throw ParseError("field '" + std::string(what) + "' must be a number");
  }
  if (!std::isfinite(v)) throw ParseError("field '" + std::string(what) + "' is not finite");
  return v;
}

ProblemDocument parse_problem(const Json& doc) {
  reject_unknown_keys(doc, "problem", {"start", "end", "options"});
  const Json& options = require(doc, "options", "problem");
  reject_unknown_keys(options, "options", {"angle_unit", "samples", "output"});

  ProblemDocument out;
  const Json& unit = require(options, "angle_unit", "options");
  if (unit == "deg") {
    out.options.angle_unit = AngleUnit::Degrees;
  } else if (unit == "rad") {
    out.options.angle_unit = AngleUnit::Radians;
  } else {
    throw ParseError("options.angle_unit must be \"deg\" or \"rad\"");
  }
  if (const auto it = options.find("samples"); it != options.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 2 || it->get<long long>() > 1000000) {
      throw ParseError("options.samples must be an integer in [2, 1000000]");
    }
    out.options.samples = it->get<int>();
  }
  if (const auto it = options.find("output"); it != options.end()) {
    if (!it->is_array()) throw ParseError("options.output must be an array");
    out.options.output = {false, false, false};
    for (const Json& part : *it) {
      if (part == "polyline") {
        out.options.output.polyline = true;
      } else if (part == "profile") {
        out.options.output.profile = true;
      } else if (part == "coefficients") {
        out.options.output.coefficients = true;
      } else {
        throw ParseError("unknown output selection " + part.dump());
      }
    }
  }
  const double scale = out.options.angle_unit == AngleUnit::Degrees ? kDeg : 1.0;
  out.start = parse_element(require(doc, "start", "problem"), "start", scale);
  out.end = parse_element(require(doc, "end", "problem"), "end", scale);
  return out;
}

ProblemDocument parse_problem_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

Json solution_document(const SolveOutcome& outcome, const ProblemOptions& options) {
  const SolvabilityClass& cls = outcome.classification;
  Json doc;
  doc["format"] = "rspiral.solution.v1";
  doc["classification"] = std::string(to_string(cls.tag));
  doc["message"] = std::string(describe(cls.tag));

  Json diag;
  diag["Q"] = format_number(cls.invariants.Q);
  diag["sigma"] = format_number(cls.invariants.sigma);
  diag["q_max"] = cls.q_max ? Json(format_number(*cls.q_max)) : Json(nullptr);
  if (outcome.diagnostics.quartic) {
    const QuarticSolution& qs = *outcome.diagnostics.quartic;
    diag["Q1"] = format_number(qs.Q1);
    diag["theta0"] = format_number(qs.theta0);
    diag["quartic_residual"] = format_number(qs.residual);
  } else {
    diag["quartic_residual"] = nullptr;
  }
  Json fairness = Json::array();
  for (double f : outcome.diagnostics.fairness) fairness.push_back(format_number(f));
  diag["fairness"] = fairness;
  diag["fairer_solution"] = outcome.diagnostics.fairer_solution;
  doc["diagnostics"] = diag;

  const ChordFrame& frame = outcome.chord.frame;
  doc["frame"] = {{"c", format_number(frame.c)},
                  {"mu", format_number(frame.mu)},
                  {"origin", point_json(frame.origin)}};
  const NormalizedProblem& np = outcome.chord.problem;
  doc["normalized"] = {{"alpha", format_number(np.alpha)},
                       {"beta", format_number(np.beta)},
                       {"a", format_number(np.a)},
                       {"b", format_number(np.b)}};
  doc["samples"] = options.samples;

  Json solutions = Json::array();
  for (const RationalSpiralArc& curve : outcome.solutions) {
    Json sol;
    sol["index"] = curve.solution_index;
    sol["control_point"] = {{"p", format_number(curve.arc.p)}, {"q", format_number(curve.arc.q)}};
    Json moebius;
    moebius["r0"] = format_number(curve.params.r0);
    moebius["lambda0"] = format_number(curve.params.lambda0);
    if (const auto z0 = curve.params.z0()) {
      moebius["z0"] = point_json({z0->real(), z0->imag()});
    } else {
      moebius["z0"] = "infinite";
    }
    sol["moebius"] = moebius;
    if (options.output.coefficients) {
      sol["coefficients"] = {{"x", poly_json(curve.coeffs.x)},
                             {"y", poly_json(curve.coeffs.y)},
                             {"den", poly_json(curve.coeffs.den)}};
      sol["bezier"] = bezier_json(to_rational_bezier(curve.arc, curve.params));
    }
    if (options.output.polyline) {
      Json pts = Json::array();
      for (const Point2& p : sample_curve(curve, options.samples)) pts.push_back(point_json(p));
      sol["polyline"] = pts;
    }
    if (options.output.profile) {
      Json prof = Json::array();
      for (const ProfileSample& s : curvature_profile(curve, options.samples).samples) {
        prof.push_back(Json::array({format_number(s.t), format_number(s.s), format_number(s.k)}));
      }
      sol["profile"] = prof;
    }
    solutions.push_back(sol);
  }
  doc["solutions"] = solutions;
  return doc;
}

std::vector<std::vector<Point2>> reevaluate_polylines(const Json& doc) {
  const ChordFrame frame = read_frame(require(doc, "frame", "solution"));
  const int samples = require(doc, "samples", "solution").get<int>();
  std::vector<std::vector<Point2>> out;
  for (const Json& sol : require(doc, "solutions", "solution")) {
    std::vector<Point2> pts;
    if (const auto it = sol.find("bezier"); it != sol.end()) {
      const RationalBezier rb = read_bezier(*it);
      for (int i = 0; i < samples; ++i) {
        pts.push_back(
            map_back(frame, eval_rational_bezier(rb, static_cast<double>(i) / (samples - 1))));
      }
    } else {
      const Json& coeffs = require(sol, "coefficients", "solution entry");
      const RationalCoeffs rc{read_poly(require(coeffs, "x", "coefficients")),
                              read_poly(require(coeffs, "y", "coefficients")),
                              read_poly(require(coeffs, "den", "coefficients"))};
      for (int i = 0; i < samples; ++i) {
        pts.push_back(map_back(frame, rc.eval(static_cast<double>(i) / (samples - 1))));
      }
    }
    out.push_back(std::move(pts));
  }
  return out;
}

std::vector<std::vector<Point2>> stored_polylines(const Json& doc) {
  std::vector<std::vector<Point2>> out;
  for (const Json& sol : require(doc, "solutions", "solution")) {
    std::vector<Point2> pts;
    for (const Json& p : require(sol, "polyline", "solution entry")) {
      pts.push_back({read_number(p.at(0), "x"), read_number(p.at(1), "y")});
    }
    out.push_back(std::move(pts));
  }
  return out;
}

std::string render_solution_svg(const SolveOutcome& outcome, int samples) {
  SvgCanvas canvas;
  const ChordFrame& frame = outcome.chord.frame;
  canvas.add({map_back(frame, {-1.0, 0.0}), map_back(frame, {1.0, 0.0})},
             "stroke=\"#7f8c8d\"");
  for (const RationalSpiralArc& curve : outcome.solutions) {
    canvas.add({map_back(frame, {-1.0, 0.0}), map_back(frame, {curve.arc.p, curve.arc.q}),
                map_back(frame, {1.0, 0.0})},
               "stroke=\"#95a5a6\" stroke-dasharray=\"3 2\"", false);
    std::vector<Point2> parabola;
    for (int i = 0; i < samples; ++i) {
      parabola.push_back(
          map_back(frame, eval_parabola(curve.arc, static_cast<double>(i) / (samples - 1))));
    }
    canvas.add(std::move(parabola), "stroke=\"#95a5a6\" stroke-dasharray=\"1 2\"", false);
  }
  for (const RationalSpiralArc& curve : outcome.solutions) {
    canvas.add(sample_curve(curve, samples), kCurveStyles[(curve.solution_index - 1) % 2]);
  }
  const Lense lense = lense_of(outcome.chord.problem);
  for (const CircularArc& arc : {lense.first, lense.second}) {
    std::vector<Point2> pts;
    for (int i = 0; i < samples; ++i) {
      pts.push_back(map_back(frame, arc.point(static_cast<double>(i) / (samples - 1))));
    }
    canvas.add(std::move(pts), "stroke=\"#27ae60\" stroke-dasharray=\"6 3\"", false);
  }
  return canvas.render();
}

std::string curvature_csv(const SolveOutcome& outcome, int samples) {
  std::string out = "solution,t,s,k\n";
  for (const RationalSpiralArc& curve : outcome.solutions) {
    for (const ProfileSample& s : curvature_profile(curve, samples).samples) {
      out += std::to_string(curve.solution_index) + "," + format_number(s.t) + "," +
             format_number(s.s) + "," + format_number(s.k) + "\n";
    }
  }
  return out;
}

Json clothoid_report(const ClothoidApproximation& approx, double margin) {
  Json doc;
  doc["format"] = "rspiral.clothoid.v1";
  doc["margin"] = format_number(margin);
  Json breaks = Json::array();
  for (double s : approx.breakpoints) breaks.push_back(format_number(s));
  doc["breakpoints"] = breaks;
  doc["span_count"] = approx.spans.size();
  Json spans = Json::array();
  for (std::size_t i = 0; i < approx.spans.size(); ++i) {
    const SpanDeviation& dev = approx.report.spans[i];
    spans.push_back({{"s0", format_number(dev.s0)},
                     {"s1", format_number(dev.s1)},
                     {"classification", std::string(to_string(approx.spans[i].classification.tag))},
                     {"max_deviation", Json::array({format_number(dev.max_deviation[0]),
                                                    format_number(dev.max_deviation[1])})}});
  }
  doc["spans"] = spans;
  doc["max_deviation"] = Json::array({format_number(approx.report.max_deviation[0]),
                                      format_number(approx.report.max_deviation[1])});
  doc["overall_max_deviation"] = format_number(approx.report.overall);
  return doc;
}

std::string clothoid_csv(const ClothoidApproximation& approx, int samples_per_span) {
  std::string out = "s,k_clothoid,k_solution1,k_solution2\n";
  for (std::size_t i = 0; i < approx.spans.size(); ++i) {
    const double s0 = approx.breakpoints[i];
    const double s1 = approx.breakpoints[i + 1];
    std::array<std::vector<double>, 2> tables;
    for (std::size_t j = 0; j < 2; ++j) {
      tables[j] = cumulative_arc_length(approx.spans[i].solutions[j], 256);
    }
    for (int m = 0; m < samples_per_span; ++m) {
      const double f = static_cast<double>(m) / (samples_per_span - 1);
      out += format_number(s0 + f * (s1 - s0)) + "," + format_number(s0 + f * (s1 - s0));
      for (std::size_t j = 0; j < 2; ++j) {
        const RationalSpiralArc& curve = approx.spans[i].solutions[j];
        const double t = t_at_arc_length(curve, tables[j], f * tables[j].back());
        out += "," + format_number(curve.curvature(t));
      }
      out += "\n";
    }
  }
  return out;
}

std::string render_clothoid_svg(const ClothoidApproximation& approx, int samples) {
  SvgCanvas canvas;
  std::vector<Point2> clothoid;
  const double s0 = approx.breakpoints.front();
  const double s1 = approx.breakpoints.back();
  const int n = samples * static_cast<int>(approx.spans.size());
  for (int i = 0; i < n; ++i) {
    const CurvatureElement e = clothoid_element(s0 + (s1 - s0) * i / (n - 1));
    clothoid.push_back({e.x, e.y});
  }
  canvas.add(std::move(clothoid), "stroke=\"#7f8c8d\" stroke-dasharray=\"2 2\"");
  for (const SolveOutcome& span : approx.spans) {
    for (const RationalSpiralArc& curve : span.solutions) {
      canvas.add(sample_curve(curve, samples), kCurveStyles[(curve.solution_index - 1) % 2]);
    }
  }
  return canvas.render();
}

int cmd_check(const std::filesystem::path& input, std::ostream& out, std::ostream& err) {
  ProblemDocument problem;
  try {
    problem = parse_problem_text(read_file(input));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kIoError;
  }
  NormalizedChord chord;
  try {
    chord = normalize_to_chord(problem.start, problem.end);
  } catch (const DegenerateChord& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::kParseError;
  }
  const SolvabilityClass cls = classify(chord.problem);
  out << to_string(cls.tag) << ": " << describe(cls.tag) << "\n";
  out << "Q = " << format_number(cls.invariants.Q) << "\n";
  out << "sigma = " << format_number(cls.invariants.sigma) << " rad ("
      << format_number(cls.invariants.sigma / kDeg) << " deg)\n";
  out << "q_max = " << (cls.q_max ? format_number(*cls.q_max) : std::string("undefined")) << "\n";
  return exit_code_for(cls.tag);
}

int cmd_solve(const SolvePaths& paths, std::ostream& out, std::ostream& err) {
  ProblemDocument problem;
  try {
    problem = parse_problem_text(read_file(paths.input));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kIoError;
  }
  SolveOutcome outcome;
  try {
    outcome = solve_g2_hermite(problem.start, problem.end);
  } catch (const DegenerateChord& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::kParseError;
  }
  try {
    write_file(paths.output, dump(solution_document(outcome, problem.options)));
    if (outcome.solvable() && paths.svg) {
      write_file(*paths.svg, render_solution_svg(outcome));
    }
    if (outcome.solvable() && paths.csv) {
      write_file(*paths.csv, curvature_csv(outcome, problem.options.samples));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kIoError;
  }
  out << to_string(outcome.classification.tag) << ": " << describe(outcome.classification.tag)
      << "\n";
  return exit_code_for(outcome.classification.tag);
}

int cmd_clothoid(const ClothoidArgs& args, std::ostream& out, std::ostream& err) {
  ClothoidApproximation approx;
  try {
    ClothoidPolicy policy;
    policy.margin = args.margin;
    approx = approximate_clothoid(args.from, args.to, policy);
  } catch (const NotApplicable& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kMethodNotApplicable;
  } catch (const DomainError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::kParseError;
  }
  try {
    std::filesystem::create_directories(args.out_dir);
    write_file(args.out_dir / "report.json", dump(clothoid_report(approx, args.margin)));
    write_file(args.out_dir / "curvature.csv", clothoid_csv(approx));
    write_file(args.out_dir / "approximation.svg", render_clothoid_svg(approx));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kIoError;
  }
  out << approx.spans.size() << " spans, max deviation "
      << format_number(approx.report.overall) << "\n";
  return exit_code::kOk;
}

}  // namespace rspiral::io
