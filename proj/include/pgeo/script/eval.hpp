#ifndef PGEO_SCRIPT_EVAL_HPP
#define PGEO_SCRIPT_EVAL_HPP

#include <map>
#include <variant>
#include <vector>

#include "pgeo/conic.hpp"
#include "pgeo/extension.hpp"
#include "pgeo/script/ast.hpp"

namespace pgeo::script {

/// Runtime value of a declaration or subexpression.
using Value = std::variant<HomPoint, HomLine, Conic, Projectivity, CrossRatio, bool>;

std::string kind_name(const Value& v);
std::string canonical_text(const Value& v);

/// Declaration environment: single assignment, iteration in declaration order.
struct Env {
  std::vector<std::pair<std::string, Value>> ordered;
  std::map<std::string, std::size_t> index;

  bool has(const std::string& name) const { return index.count(name) != 0; }
  const Value& get(const std::string& name) const { return ordered[index.at(name)].second; }
  void put(const std::string& name, Value v);
};

struct DeclarationRec {
  std::string name, kind, canonical;
};
struct AssertionRec {
  std::string source;
  bool pass = false;
  std::string values;  // canonical forms of the tested operands
};
struct ProbeRec {
  std::string source, outcome;
};
struct ErrorRec {
  std::string source;
  int line = 0, col = 0;
  std::string code, message;
};
struct RenderRequest {
  std::string path;
  std::vector<Rat> viewport;  // empty or x0,y0,x1,y1
};

struct RunReport {
  std::vector<DeclarationRec> declarations;
  std::vector<AssertionRec> assertions;
  std::vector<ProbeRec> probes;
  std::vector<ErrorRec> errors;
  std::vector<RenderRequest> renders;
  Env env;
  int exit_code = 0;  // 0 ok, 1 assertion failed, 3 construction error
};

/// Executes the statements in order; stops at the first construction error.
RunReport eval(const Ast& ast);

/// Byte-stable JSON form of the report.
std::string report_json(const RunReport& report);

/// Human-readable form, including offending values of failed assertions.
std::string report_text(const RunReport& report);

}  // namespace pgeo::script

#endif
