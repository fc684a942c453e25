#ifndef PGEO_SCRIPT_AST_HPP
#define PGEO_SCRIPT_AST_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgeo/rat.hpp"

namespace pgeo::script {

struct SourcePos {
  int line = 0;  // 1-based
  int col = 0;   // 1-based
};

/// Expression: a literal, a name reference, or a builtin call.
struct Expr {
  enum class Kind { AffinePoint, HomPointLit, HomLineLit, ScalarLit, Ref, Call } kind;
  SourcePos pos;
  std::vector<Rat> nums;   // literal payload
  std::string name;        // Ref / Call
  std::vector<Expr> args;  // Call
};

struct Stmt {
  enum class Kind { Decl, Assert, Print, Render, Probe } kind;
  SourcePos pos;
  std::string source;              // the trimmed statement text
  std::string decl_kind;           // Decl: point|line|conic|map|scalar
  std::string name;                // Decl / Print name; Render path; Probe kind
  std::optional<Expr> expr;        // Decl / Assert
  std::vector<Rat> probe_args;     // Probe scalar / Render viewport
};

using Ast = std::vector<Stmt>;

/// Parse failure with a precise position and the expectation that failed.
class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& expected)
      : Error("ParseError", "line " + std::to_string(pos.line) + ", column " +
                                std::to_string(pos.col) + ": expected " + expected),
        pos_(pos),
        expected_(expected) {}

  SourcePos pos() const { return pos_; }
  const std::string& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::string expected_;
};

/// Whole-script parse; one statement per physical line, '#' comments.
Ast parse(const std::string& source);

/// Canonical re-rendering of a parsed script; parsing the result is a fixpoint.
std::string pretty_print(const Ast& ast);

}  // namespace pgeo::script

#endif
