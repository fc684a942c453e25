#include <doctest.h>

#include <cmath>

#include "pgeo/script/ast.hpp"
#include "pgeo/script/eval.hpp"
#include "pgeo/script/render.hpp"

using namespace pgeo;
using namespace pgeo::script;

namespace {
std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++n;
  return n;
}
}  // namespace

TEST_CASE("parsing statements and literals") {
  Ast ast = parse("point A = (0,0)\nline l = join(A, A)\n");
  REQUIRE(ast.size() == 2);
  CHECK(ast[0].kind == Stmt::Kind::Decl);
  CHECK(ast[0].decl_kind == "point");
  CHECK(ast[0].name == "A");
  CHECK(ast[1].expr->kind == Expr::Kind::Call);

  Ast frac = parse("point A = (1/2, 3)\n");
  RunReport rep = eval(frac);
  REQUIRE(rep.declarations.size() == 1);
  CHECK(rep.declarations[0].canonical == "<1,6,2>");

  CHECK_THROWS_AS(parse("line l = join(A,\n"), ParseError);
  try {
    parse("line l = join(A,");
  } catch (const ParseError& e) {
    CHECK(e.pos().line == 1);
    CHECK(e.pos().col == 17);
  }

  // comments and blank lines are skipped, positions are 1-based
  Ast with_comments = parse("# leading comment\n\npoint B = <1,2,3>  # trailing\n");
  REQUIRE(with_comments.size() == 1);
  CHECK(with_comments[0].pos.line == 3);
}

TEST_CASE("pretty-printing is a parse fixpoint") {
  std::string src =
      "point A = (0,0) # a comment\n"
      "point B = (1,0)\n"
      "point C = (2,0)\n"
      "point D = harmonic(A, B, C)\n"
      "scalar r = crossratio(A,B,C,D)\n"
      "assert apart(D, C)\n"
      "print D\n"
      "probe llpo 1/1000\n";
  Ast ast = parse(src);
  std::string printed = pretty_print(ast);
  Ast reparsed = parse(printed);
  CHECK(pretty_print(reparsed) == printed);
}

TEST_CASE("evaluating the harmonic script") {
  std::string src =
      "point A = (0,0)\n"
      "point B = (1,0)\n"
      "point C = (2,0)\n"
      "point D = harmonic(A, B, C)\n"
      "assert apart(D, C)\n";
  RunReport rep = eval(parse(src));
  CHECK(rep.exit_code == 0);
  REQUIRE(rep.declarations.size() == 4);
  CHECK(rep.declarations[3].canonical == "<2,0,3>");
  REQUIRE(rep.assertions.size() == 1);
  CHECK(rep.assertions[0].pass);
}

TEST_CASE("construction errors carry their position") {
  std::string src =
      "line l = [0,1,0]\n"
      "assert on(meet(l,l), l)\n";
  RunReport rep = eval(parse(src));
  CHECK(rep.exit_code == 3);
  REQUIRE(rep.errors.size() == 1);
  CHECK(rep.errors[0].code == "CoincidentLines");
  CHECK(rep.errors[0].line == 2);

  RunReport undef = eval(parse("point A = nowhere\n"));
  CHECK(undef.exit_code == 3);
  CHECK(undef.errors[0].code == "UndefinedName");
}

TEST_CASE("failed assertions set exit code one and record values") {
  RunReport rep = eval(parse("point A = (0,0)\nassert apart(A, A)\n"));
  CHECK(rep.exit_code == 1);
  REQUIRE(rep.assertions.size() == 1);
  CHECK_FALSE(rep.assertions[0].pass);
  CHECK(rep.assertions[0].values == "<0,0,1>, <0,0,1>");
  std::string text = report_text(rep);
  CHECK(count_occurrences(text, "FAIL") == 1);
  CHECK(count_occurrences(text, "<0,0,1>") >= 2);
}

TEST_CASE("conic builtins: five points, pascal sixth point") {
  std::string src =
      "point P1 = (1,0)\n"
      "point P2 = (0,1)\n"
      "point P3 = (-1,0)\n"
      "point P4 = (0,-1)\n"
      "point P5 = (3/5,4/5)\n"
      "conic k = conic5(P1, P2, P3, P4, P5)\n"
      "point E = (-3/5,-4/5)\n"
      "point F0 = (3/5,-4/5)\n"
      "line l = join(E, F0)\n"
      "point F = sixth(k, P1, P5, P2, P3, E, l)\n"
      "assert on(F, k)\n"
      "assert on(F, l)\n";
  RunReport rep = eval(parse(src));
  CHECK(rep.exit_code == 0);
  for (const auto& a : rep.assertions) CHECK(a.pass);
}

TEST_CASE("map builtins: projmap, apply, axis") {
  std::string src =
      "line l = [0,1,0]\n"
      "line m = [1,0,0]\n"
      "point P = <0,0,1>\n"
      "point Q = <1,0,1>\n"
      "point R = <1,0,0>\n"
      "point P2 = <0,1,1>\n"
      "point Q2 = <0,2,1>\n"
      "point R2 = <0,1,0>\n"
      "map f = projmap(l, P, Q, R, m, P2, Q2, R2)\n"
      "point X = apply(f, <2,0,1>)\n"
      "line h = axis(f)\n"
      "assert on(X, m)\n";
  RunReport rep = eval(parse(src));
  CHECK(rep.exit_code == 0);
  CHECK(rep.assertions[0].pass);
}

TEST_CASE("json report is byte-stable") {
  std::string src =
      "point A = (0,0)\n"
      "point B = (2,0)\n"
      "point C = (1,0)\n"
      "point D = harmonic(A, B, C)\n"
      "assert apart(D, C)\n"
      "probe cotrans 1/7\n";
  std::string j1 = report_json(eval(parse(src)));
  std::string j2 = report_json(eval(parse(src)));
  CHECK(j1 == j2);
  CHECK(count_occurrences(j1, "\"<1,0,0>\"") == 1);  // midpoint conjugate at infinity
  CHECK(count_occurrences(j1, "\"declarations\"") == 1);
  CHECK(count_occurrences(j1, "\"assertions\"") == 1);
  CHECK(count_occurrences(j1, "\"errors\"") == 1);
}

TEST_CASE("svg census for points, a line, and an infinite point") {
  RunReport rep = eval(parse("point A = (0,0)\npoint B = (1,1)\nline l = join(A, B)\n"));
  REQUIRE(rep.exit_code == 0);
  std::string svg = render_svg_text(rep.env, Viewport{});
  CHECK(count_occurrences(svg, "<circle") == 2);
  CHECK(count_occurrences(svg, "<line") == 1);
  CHECK(count_occurrences(svg, "<text") == 3);

  RunReport inf = eval(parse("point I = <1,0,0>\n"));
  std::string svg_inf = render_svg_text(inf.env, Viewport{});
  CHECK(count_occurrences(svg_inf, "inf-arrow") >= 1);
  // the arrow tip sits on the +x edge of the 640px canvas
  CHECK(svg_inf.find("640.00 320.00") != std::string::npos);
}

TEST_CASE("conic sampling stays within a pixel of the true circle") {
  std::string src =
      "point P1 = (1,0)\npoint P2 = (0,1)\npoint P3 = (-1,0)\npoint P4 = (0,-1)\n"
      "point P5 = (3/5,4/5)\nconic k = conic5(P1, P2, P3, P4, P5)\n";
  RunReport rep = eval(parse(src));
  Viewport vp{-2, -2, 2, 2};
  std::string svg = render_svg_text(rep.env, vp);

  // pull the polyline samples back out of the svg
  std::size_t at = svg.find("points=\"");
  REQUIRE(at != std::string::npos);
  std::size_t end = svg.find('"', at + 8);
  std::string pts = svg.substr(at + 8, end - at - 8);
  std::istringstream in(pts);
  std::string pair;
  std::vector<std::pair<double, double>> xy;
  while (in >> pair) {
    std::size_t comma = pair.find(',');
    double px = std::stod(pair.substr(0, comma));
    double py = std::stod(pair.substr(comma + 1));
    // unmap from pixels to the chart
    double x = px / 640.0 * 4.0 - 2.0;
    double y = (640.0 - py) / 640.0 * 4.0 - 2.0;
    xy.emplace_back(x, y);
  }
  REQUIRE(xy.size() >= 64);
  const double px_unit = 4.0 / 640.0;  // chart units per pixel
  for (const auto& [x, y] : xy) {
    // samples lie on the circle up to svg decimal rounding (far below 1px)
    CHECK(std::abs(std::hypot(x, y) - 1.0) < px_unit);
  }
  // consecutive samples are close enough that chords hug the circle within 1px
  for (std::size_t i = 1; i < xy.size(); ++i) {
    double chord = std::hypot(xy[i].first - xy[i - 1].first, xy[i].second - xy[i - 1].second);
    if (chord > 1.0) continue;  // run break (clipping)
    double sagitta = 1.0 - std::sqrt(std::max(0.0, 1.0 - chord * chord / 4.0));
    CHECK(sagitta < px_unit);
  }
}

TEST_CASE("render statements are collected with their viewport") {
  RunReport rep = eval(parse("point A = (0,0)\nrender \"out.svg\" -1 -1 1 1\n"));
  CHECK(rep.exit_code == 0);
  REQUIRE(rep.renders.size() == 1);
  CHECK(rep.renders[0].path == "out.svg");
  REQUIRE(rep.renders[0].viewport.size() == 4);
  CHECK(rep.renders[0].viewport[2] == Rat(1));

  CHECK_THROWS_AS(parse("render \"out.svg\" 1 2\n"), ParseError);
}

TEST_CASE("probe statements land in the report") {
  RunReport rep = eval(parse("probe llpo 1/1000\nprobe llpo 0\nprobe cotrans 0\n"));
  REQUIRE(rep.probes.size() == 3);
  CHECK(rep.probes[0].outcome.find("meet <0,1,0>") != std::string::npos);
  CHECK(rep.probes[1].outcome.find("IdenticalLines") != std::string::npos);
  CHECK(rep.probes[2].outcome.find("m0*") != std::string::npos);
}
