#include "pgeo/script/eval.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace pgeo::script {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void type_fail(const Expr& e, const std::string& expected) {
  throw Error("TypeMismatch", "line " + std::to_string(e.pos.line) + ": " + e.name + " expects " +
                                  expected);
}

const HomPoint& as_point(const Value& v, const Expr& e) {
  if (const HomPoint* p = std::get_if<HomPoint>(&v)) return *p;
  type_fail(e, "a point argument");
}

const HomLine& as_line(const Value& v, const Expr& e) {
  if (const HomLine* l = std::get_if<HomLine>(&v)) return *l;
  type_fail(e, "a line argument");
}

const Conic& as_conic(const Value& v, const Expr& e) {
  if (const Conic* k = std::get_if<Conic>(&v)) return *k;
  type_fail(e, "a conic argument");
}

const Projectivity& as_map(const Value& v, const Expr& e) {
  if (const Projectivity* m = std::get_if<Projectivity>(&v)) return *m;
  type_fail(e, "a map argument");
}

Rat as_rat(const Value& v, const Expr& e) {
  if (const CrossRatio* r = std::get_if<CrossRatio>(&v)) {
    if (!r->infinite) return r->value;
  }
  type_fail(e, "a finite scalar argument");
}

struct Evaluator {
  Env env;

  Value eval_expr(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::AffinePoint:
        return affine_point(e.nums[0], e.nums[1]);
      case Expr::Kind::HomPointLit:
        return HomPoint(e.nums[0], e.nums[1], e.nums[2]);
      case Expr::Kind::HomLineLit:
        return HomLine(e.nums[0], e.nums[1], e.nums[2]);
      case Expr::Kind::ScalarLit:
        return CrossRatio::of(e.nums[0]);
      case Expr::Kind::Ref:
        if (!env.has(e.name)) throw Error("UndefinedName", "'" + e.name + "' is not declared");
        return env.get(e.name);
      case Expr::Kind::Call:
        return eval_call(e);
    }
    throw InternalError("unhandled expression kind");
  }

  Value eval_call(const Expr& e) {
    std::vector<Value> args;
    args.reserve(e.args.size());
    for (const Expr& a : e.args) args.push_back(eval_expr(a));
    auto arity = [&](std::size_t n) {
      if (args.size() != n)
        throw Error("TypeMismatch", "line " + std::to_string(e.pos.line) + ": " + e.name +
                                        " takes " + std::to_string(n) + " arguments");
    };

    const std::string& f = e.name;
    if (f == "join") {
      arity(2);
      return join(as_point(args[0], e), as_point(args[1], e));
    }
    if (f == "meet") {
      arity(2);
      return meet(as_line(args[0], e), as_line(args[1], e));
    }
    if (f == "dual") {
      arity(1);
      if (const HomPoint* p = std::get_if<HomPoint>(&args[0])) return dualize(*p);
      if (const HomLine* l = std::get_if<HomLine>(&args[0])) return dualize(*l);
      type_fail(e, "a point or a line");
    }
    if (f == "harmonic") {
      arity(3);
      return harmonic(as_point(args[0], e), as_point(args[1], e), as_point(args[2], e));
    }
    if (f == "crossratio") {
      arity(4);
      return cross_ratio(as_point(args[0], e), as_point(args[1], e), as_point(args[2], e),
                         as_point(args[3], e));
    }
    if (f == "conic5") {
      arity(5);
      return Conic::through5(as_point(args[0], e), as_point(args[1], e), as_point(args[2], e),
                             as_point(args[3], e), as_point(args[4], e));
    }
    if (f == "on") {
      arity(2);
      const HomPoint& p = as_point(args[0], e);
      if (const HomLine* l = std::get_if<HomLine>(&args[1])) return incident(p, *l);
      if (const Conic* k = std::get_if<Conic>(&args[1])) return on_conic(*k, p);
      type_fail(e, "a line or conic second argument");
    }
    if (f == "outside") {
      arity(2);
      const HomPoint& p = as_point(args[0], e);
      if (const HomLine* l = std::get_if<HomLine>(&args[1])) return outside(p, *l);
      if (const Conic* k = std::get_if<Conic>(&args[1])) return outside_conic(*k, p);
      type_fail(e, "a line or conic second argument");
    }
    if (f == "apart") {
      arity(2);
      if (std::holds_alternative<HomPoint>(args[0]))
        return apart(as_point(args[0], e), as_point(args[1], e));
      if (std::holds_alternative<HomLine>(args[0]))
        return apart(as_line(args[0], e), as_line(args[1], e));
      type_fail(e, "two points or two lines");
    }
    if (f == "tangent") {
      arity(2);
      return tangent_at(as_conic(args[0], e), as_point(args[1], e));
    }
    if (f == "secant2") {
      arity(3);
      auto pair = secants_through(as_conic(args[0], e), as_point(args[1], e));
      Rat idx = as_rat(args[2], e);
      if (idx == Rat(0)) return pair.first;
      if (idx == Rat(1)) return pair.second;
      type_fail(e, "secant index 0 or 1");
    }
    if (f == "polar") {
      arity(2);
      return polar(as_conic(args[0], e), as_point(args[1], e));
    }
    if (f == "pole") {
      arity(2);
      return pole(as_conic(args[0], e), as_line(args[1], e));
    }
    if (f == "pascal") {
      arity(7);
      std::array<HomPoint, 6> hex;
      for (int i = 0; i < 6; ++i) hex[i] = as_point(args[i + 1], e);
      return pascal_line(as_conic(args[0], e), hex);
    }
    if (f == "sixth") {
      arity(7);
      return pascal_sixth_point(as_conic(args[0], e), as_point(args[1], e), as_point(args[2], e),
                                as_point(args[3], e), as_point(args[4], e), as_point(args[5], e),
                                as_line(args[6], e));
    }
    if (f == "projmap") {
      arity(8);
      return projectivity_from_triples(as_line(args[0], e), as_point(args[1], e),
                                       as_point(args[2], e), as_point(args[3], e),
                                       as_line(args[4], e), as_point(args[5], e),
                                       as_point(args[6], e), as_point(args[7], e));
    }
    if (f == "apply") {
      arity(2);
      return apply(as_map(args[0], e), as_point(args[1], e));
    }
    if (f == "axis") {
      arity(1);
      return axis_of_homology(as_map(args[0], e));
    }
    if (f == "involution") {
      arity(1);
      return is_involution(as_map(args[0], e));
    }
    throw Error("UnknownBuiltin", "'" + f + "' is not a builtin");
  }
};

std::string expr_values_text(const std::vector<Value>& vals) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? ", " : "") << canonical_text(vals[i]);
  return os.str();
}

}  // namespace

std::string kind_name(const Value& v) {
  if (std::holds_alternative<HomPoint>(v)) return "point";
  if (std::holds_alternative<HomLine>(v)) return "line";
  if (std::holds_alternative<Conic>(v)) return "conic";
  if (std::holds_alternative<Projectivity>(v)) return "map";
  if (std::holds_alternative<CrossRatio>(v)) return "scalar";
  return "bool";
}

std::string canonical_text(const Value& v) {
  if (const HomPoint* p = std::get_if<HomPoint>(&v)) return to_string(*p);
  if (const HomLine* l = std::get_if<HomLine>(&v)) return to_string(*l);
  if (const Conic* k = std::get_if<Conic>(&v)) return to_string(*k);
  if (const Projectivity* m = std::get_if<Projectivity>(&v)) {
    std::ostringstream os;
    os << "map(" << to_string(m->src()) << " -> " << to_string(m->dst())
       << ", length=" << m->length() << ")";
    return os.str();
  }
  if (const CrossRatio* r = std::get_if<CrossRatio>(&v)) return to_string(*r);
  return std::get<bool>(v) ? "true" : "false";
}

void Env::put(const std::string& name, Value v) {
  if (has(name)) throw Error("DuplicateName", "'" + name + "' is already declared");
  index[name] = ordered.size();
  ordered.emplace_back(name, std::move(v));
}

RunReport eval(const Ast& ast) {
  RunReport report;
  Evaluator ev;
  bool any_failed_assert = false;

  for (const Stmt& s : ast) {
    try {
      switch (s.kind) {
        case Stmt::Kind::Decl: {
          Value v = ev.eval_expr(*s.expr);
          std::string want = s.decl_kind;
          if (kind_name(v) != want)
            throw Error("TypeMismatch",
                        "declared " + want + " but the expression is a " + kind_name(v));
          ev.env.put(s.name, v);
          report.declarations.push_back({s.name, want, canonical_text(v)});
          break;
        }
        case Stmt::Kind::Assert: {
          Value v = ev.eval_expr(*s.expr);
          const bool* b = std::get_if<bool>(&v);
          if (!b) throw Error("TypeMismatch", "assert needs a boolean predicate");
          std::vector<Value> operand_values;
          if (s.expr->kind == Expr::Kind::Call)
            for (const Expr& a : s.expr->args) operand_values.push_back(ev.eval_expr(a));
          report.assertions.push_back({s.source, *b, expr_values_text(operand_values)});
          if (!*b) any_failed_assert = true;
          break;
        }
        case Stmt::Kind::Print: {
          if (!ev.env.has(s.name))
            throw Error("UndefinedName", "'" + s.name + "' is not declared");
          const Value& v = ev.env.get(s.name);
          report.declarations.push_back({s.name, kind_name(v), canonical_text(v)});
          break;
        }
        case Stmt::Kind::Render: {
          report.renders.push_back({s.name, s.probe_args});
          break;
        }
        case Stmt::Kind::Probe: {
          if (s.name == "llpo") {
            LlpoProbe p = brouwerian_probe(s.probe_args[0]);
            report.probes.push_back({s.source, p.summary});
          } else {
            CotransProbe p = cotransitivity_probe(s.probe_args[0]);
            report.probes.push_back({s.source, p.summary});
          }
          break;
        }
      }
    } catch (const Error& err) {
      report.errors.push_back({s.source, s.pos.line, s.pos.col, err.code(), err.what()});
      report.exit_code = 3;
      report.env = std::move(ev.env);
      return report;
    }
  }

  report.exit_code = any_failed_assert ? 1 : 0;
  report.env = std::move(ev.env);
  return report;
}

std::string report_json(const RunReport& report) {
  json j;
  j["declarations"] = json::array();
  for (const auto& d : report.declarations)
    j["declarations"].push_back({{"name", d.name}, {"kind", d.kind}, {"canonical", d.canonical}});
  j["assertions"] = json::array();
  for (const auto& a : report.assertions)
    j["assertions"].push_back({{"source", a.source}, {"pass", a.pass}});
  j["probes"] = json::array();
  for (const auto& p : report.probes)
    j["probes"].push_back({{"source", p.source}, {"outcome", p.outcome}});
  j["errors"] = json::array();
  for (const auto& e : report.errors)
    j["errors"].push_back({{"source", e.source},
                           {"line", e.line},
                           {"column", e.col},
                           {"code", e.code},
                           {"message", e.message}});
  j["exit"] = report.exit_code;
  return j.dump(2) + "\n";
}

std::string report_text(const RunReport& report) {
  std::ostringstream os;
  for (const auto& d : report.declarations)
    os << d.kind << ' ' << d.name << " = " << d.canonical << '\n';
  for (const auto& a : report.assertions) {
    os << (a.pass ? "pass  " : "FAIL  ") << a.source;
    if (!a.pass && !a.values.empty()) os << "   values: " << a.values;
    os << '\n';
  }
  for (const auto& p : report.probes) os << "probe " << p.outcome << '\n';
  for (const auto& e : report.errors)
    os << "error " << e.line << ':' << e.col << ' ' << e.code << "  " << e.message << '\n';
  return os.str();
}

}  // namespace pgeo::script
