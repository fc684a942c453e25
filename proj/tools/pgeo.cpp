#include <CLI11.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pgeo/extension.hpp"
#include "pgeo/script/ast.hpp"
#include "pgeo/script/eval.hpp"
#include "pgeo/script/render.hpp"
#include "pgeo/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pgeo::Error("IoError", "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

pgeo::script::Viewport parse_viewport(const std::string& spec) {
  pgeo::script::Viewport vp;
  if (spec.empty()) return vp;
  double vals[4];
  std::istringstream in(spec);
  std::string tok;
  for (int i = 0; i < 4; ++i) {
    if (!std::getline(in, tok, ',')) throw pgeo::Error("BadViewport", "expected x0,y0,x1,y1");
    vals[i] = std::stod(tok);
  }
  vp.x0 = vals[0];
  vp.y0 = vals[1];
  vp.x1 = vals[2];
  vp.y1 = vals[3];
  return vp;
}

int run_script(const std::string& path, bool as_json) {
  std::string source = slurp(path);
  pgeo::script::Ast ast;
  try {
    ast = pgeo::script::parse(source);
  } catch (const pgeo::script::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  pgeo::script::RunReport report = pgeo::script::eval(ast);
  if (as_json)
    std::cout << pgeo::script::report_json(report);
  else
    std::cout << pgeo::script::report_text(report);
  if (report.exit_code == 0) {
    for (const auto& r : report.renders) {
      pgeo::script::Viewport vp;
      if (r.viewport.size() == 4) {
        vp.x0 = r.viewport[0].raw().convert_to<double>();
        vp.y0 = r.viewport[1].raw().convert_to<double>();
        vp.x1 = r.viewport[2].raw().convert_to<double>();
        vp.y1 = r.viewport[3].raw().convert_to<double>();
      }
      pgeo::script::render_svg(report.env, r.path, vp);
    }
  }
  return report.exit_code;
}

int render_file(const std::string& path, const std::string& out, const std::string& viewport) {
  std::string source = slurp(path);
  pgeo::script::Ast ast;
  try {
    ast = pgeo::script::parse(source);
  } catch (const pgeo::script::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  pgeo::script::RunReport report = pgeo::script::eval(ast);
  if (report.exit_code == 3) {
    std::cerr << pgeo::script::report_text(report);
    return 3;
  }
  pgeo::script::render_svg(report.env, out, parse_viewport(viewport));
  std::cout << "wrote " << out << "\n";
  return report.exit_code;
}

json extension_json(const pgeo::ExtensionReport& r) {
  return json{{"plane", "f" + std::to_string(r.prime)},
              {"epoints", r.epoints},
              {"elines", r.elines},
              {"epoints_per_eline", r.epoints_per_eline},
              {"regular", r.regular},
              {"unique_join", r.unique_join},
              {"common_point", r.common_point},
              {"unique_common_point", r.unique_common_point},
              {"cotransitivity", r.cotransitivity}};
}

void extension_text(const pgeo::ExtensionReport& r) {
  std::cout << "extension of AG(2," << r.prime << "): " << r.epoints << " e-points, " << r.elines
            << " e-lines, " << r.epoints_per_eline << " e-points per e-line"
            << (r.regular ? "" : " (IRREGULAR)") << "\n";
  std::cout << "  unique join through two e-points: " << (r.unique_join ? "yes" : "NO") << "\n";
  std::cout << "  common e-point of any two e-lines: " << (r.common_point ? "yes" : "NO")
            << ", unique when distinct: " << (r.unique_common_point ? "yes" : "NO") << "\n";
  std::cout << "  cotransitivity of e-point apartness: " << (r.cotransitivity ? "yes" : "NO")
            << "\n";
}

int extend_cmd(const std::string& plane, const std::string& format) {
  if (plane == "f3" || plane == "f5") {
    pgeo::ExtensionReport r = plane == "f3" ? pgeo::verify_extension<3>()
                                            : pgeo::verify_extension<5>();
    pgeo::HeytingReport h = plane == "f3" ? pgeo::verify_heyting<3>() : pgeo::verify_heyting<5>();
    if (format == "json") {
      json j = extension_json(r);
      j["heyting"] = {{"points", h.points}, {"lines", h.lines}, {"cpp", h.cpp}};
      std::cout << j.dump(2) << "\n";
    } else {
      extension_text(r);
      std::cout << "  heyting extension: " << h.points << " points, " << h.lines
                << " lines, CPP " << (h.cpp ? "holds" : "FAILS") << "\n";
    }
    bool ok = r.regular && r.unique_join && r.common_point && r.unique_common_point &&
              r.cotransitivity && h.cpp;
    return ok ? 0 : 1;
  }
  if (plane == "rational") {
    pgeo::RationalExtensionReport r = pgeo::verify_rational_extension(200, 20240911, 10);
    if (format == "json") {
      std::cout << json{{"plane", "rational"},
                        {"trials", r.trials},
                        {"join_failures", r.join_failures},
                        {"meet_failures", r.meet_failures},
                        {"scpp_failures", r.scpp_failures}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "rational extension: " << r.trials << " random join/meet trials, "
                << (r.ok() ? "all verified" : "FAILURES") << "\n";
    }
    return r.ok() ? 0 : 1;
  }
  std::cerr << "unknown plane '" << plane << "' (use f3, f5 or rational)\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact projective geometry workbench"};
  app.require_subcommand(1);

  std::string file, out = "out.svg", viewport, plane = "f3", format = "text";
  bool as_json = false;
  std::size_t trials = 1000;
  std::uint64_t seed = 20240911;
  long long bound = 10;
  std::string alpha = "1/1000", c_value = "1";

  CLI::App* run = app.add_subcommand("run", "evaluate a construction script");
  run->add_option("file", file, "script file")->required();
  run->add_flag("--json", as_json, "emit the JSON report");

  CLI::App* render = app.add_subcommand("render", "render a script to SVG");
  render->add_option("file", file, "script file")->required();
  render->add_option("-o,--out", out, "output SVG path");
  render->add_option("--viewport", viewport, "x0,y0,x1,y1 of the affine chart");

  CLI::App* axioms = app.add_subcommand("axioms", "randomized axiom verification");
  axioms->add_option("--trials", trials, "configurations per check");
  axioms->add_option("--seed", seed, "random seed");
  axioms->add_option("--bound", bound, "coordinate bound");

  CLI::App* extend = app.add_subcommand("extend", "projective extension reports");
  extend->add_option("--plane", plane, "f3, f5 or rational");
  extend->add_option("--report", format, "text or json");

  CLI::App* probe = app.add_subcommand("probe", "numeric probes of the counterexamples");
  probe->require_subcommand(1);
  CLI::App* llpo = probe->add_subcommand("llpo", "meet of [a+,0,1] and [0,a-,1]");
  llpo->add_option("--alpha", alpha, "rational parameter");
  CLI::App* cotrans = probe->add_subcommand("cotrans", "e-point cotransitivity branch");
  cotrans->add_option("--c", c_value, "rational parameter");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_script(file, as_json);
    if (*render) return render_file(file, out, viewport);
    if (*axioms) {
      pgeo::AxiomSuiteResult r = pgeo::run_axiom_suite(trials, seed, bound);
      std::cout << pgeo::to_text(r);
      return r.all_passed() ? 0 : 1;
    }
    if (*extend) return extend_cmd(plane, format);
    if (*probe) {
      if (*llpo) {
        std::cout << pgeo::brouwerian_probe(pgeo::parse_rat(alpha)).summary << "\n";
        return 0;
      }
      if (*cotrans) {
        std::cout << pgeo::cotransitivity_probe(pgeo::parse_rat(c_value)).summary << "\n";
        return 0;
      }
    }
  } catch (const pgeo::Error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
