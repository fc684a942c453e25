#include "pgeo/script/ast.hpp"

#include <cctype>
#include <sstream>

namespace pgeo::script {

namespace {

struct Lexer {
  const std::string& text;
  int line;
  std::size_t i = 0;

  Lexer(const std::string& t, int line) : text(t), line(line) {}

  void skip_ws() {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  }

  bool done() {
    skip_ws();
    return i >= text.size();
  }

  SourcePos here() { return SourcePos{line, static_cast<int>(i) + 1}; }

  [[noreturn]] void fail(const std::string& expected) { throw ParseError(here(), expected); }

  char peek() {
    skip_ws();
    return i < text.size() ? text[i] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c) fail(std::string("'") + c + "'");
    ++i;
  }

  bool accept(char c) {
    skip_ws();
    if (i < text.size() && text[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      ++i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
    }
    if (start == i) fail("identifier");
    return text.substr(start, i - start);
  }

  Rat scalar() {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) {
      i = start;
      fail("number");
    }
    if (i < text.size() && text[i] == '/') {
      ++i;
      std::size_t den = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == den) fail("denominator digits");
    }
    return parse_rat(text.substr(start, i - start));
  }

  std::string string_lit() {
    skip_ws();
    if (i >= text.size() || text[i] != '"') fail("string literal");
    std::size_t start = ++i;
    while (i < text.size() && text[i] != '"') ++i;
    if (i >= text.size()) fail("closing '\"'");
    std::string out = text.substr(start, i - start);
    ++i;
    return out;
  }
};

bool is_decl_kind(const std::string& word) {
  return word == "point" || word == "line" || word == "conic" || word == "map" ||
         word == "scalar";
}

Expr parse_expr(Lexer& lex);

Expr parse_call_or_ref(Lexer& lex) {
  Expr e;
  e.pos = lex.here();
  e.name = lex.ident();
  if (lex.accept('(')) {
    e.kind = Expr::Kind::Call;
    if (!lex.accept(')')) {
      for (;;) {
        e.args.push_back(parse_expr(lex));
        if (lex.accept(')')) break;
        lex.expect(',');
      }
    }
  } else {
    e.kind = Expr::Kind::Ref;
  }
  return e;
}

Expr parse_expr(Lexer& lex) {
  Expr e;
  e.pos = lex.here();
  char c = lex.peek();
  if (c == '(') {
    lex.expect('(');
    e.kind = Expr::Kind::AffinePoint;
    e.nums.push_back(lex.scalar());
    lex.expect(',');
    e.nums.push_back(lex.scalar());
    lex.expect(')');
    return e;
  }
  if (c == '<') {
    lex.expect('<');
    e.kind = Expr::Kind::HomPointLit;
    for (int k = 0; k < 3; ++k) {
      if (k) lex.expect(',');
      e.nums.push_back(lex.scalar());
    }
    lex.expect('>');
    return e;
  }
  if (c == '[') {
    lex.expect('[');
    e.kind = Expr::Kind::HomLineLit;
    for (int k = 0; k < 3; ++k) {
      if (k) lex.expect(',');
      e.nums.push_back(lex.scalar());
    }
    lex.expect(']');
    return e;
  }
  if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
    e.kind = Expr::Kind::ScalarLit;
    e.nums.push_back(lex.scalar());
    return e;
  }
  return parse_call_or_ref(lex);
}

std::string strip_comment(const std::string& raw) {
  std::size_t hash = raw.find('#');
  std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
  std::size_t begin = body.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = body.find_last_not_of(" \t\r");
  return body.substr(0, end + 1);  // keep leading blanks so columns stay true
}

}  // namespace

Ast parse(const std::string& source) {
  Ast ast;
  std::istringstream in(source);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string body = strip_comment(raw);
    if (body.find_first_not_of(" \t") == std::string::npos) continue;

    Lexer lex(body, line_no);
    Stmt stmt;
    stmt.pos = lex.here();
    std::string head = lex.ident();
    if (is_decl_kind(head)) {
      stmt.kind = Stmt::Kind::Decl;
      stmt.decl_kind = head;
      stmt.name = lex.ident();
      lex.expect('=');
      stmt.expr = parse_expr(lex);
    } else if (head == "assert") {
      stmt.kind = Stmt::Kind::Assert;
      stmt.expr = parse_expr(lex);
    } else if (head == "print") {
      stmt.kind = Stmt::Kind::Print;
      stmt.name = lex.ident();
    } else if (head == "render") {
      stmt.kind = Stmt::Kind::Render;
      stmt.name = lex.string_lit();
      while (!lex.done()) stmt.probe_args.push_back(lex.scalar());
      if (!stmt.probe_args.empty() && stmt.probe_args.size() != 4)
        throw ParseError(stmt.pos, "a viewport of exactly four numbers");
    } else if (head == "probe") {
      stmt.kind = Stmt::Kind::Probe;
      stmt.name = lex.ident();
      if (stmt.name != "llpo" && stmt.name != "cotrans")
        throw ParseError(stmt.pos, "probe kind 'llpo' or 'cotrans'");
      stmt.probe_args.push_back(lex.scalar());
    } else {
      throw ParseError(stmt.pos, "statement keyword (point/line/conic/map/scalar/assert/print/render/probe)");
    }
    if (!lex.done()) lex.fail("end of statement");

    std::size_t first = body.find_first_not_of(" \t");
    stmt.source = body.substr(first);
    ast.push_back(std::move(stmt));
  }
  return ast;
}

namespace {

void print_expr(std::ostringstream& os, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::AffinePoint:
      os << '(' << e.nums[0] << ", " << e.nums[1] << ')';
      break;
    case Expr::Kind::HomPointLit:
      os << '<' << e.nums[0] << ',' << e.nums[1] << ',' << e.nums[2] << '>';
      break;
    case Expr::Kind::HomLineLit:
      os << '[' << e.nums[0] << ',' << e.nums[1] << ',' << e.nums[2] << ']';
      break;
    case Expr::Kind::ScalarLit:
      os << e.nums[0];
      break;
    case Expr::Kind::Ref:
      os << e.name;
      break;
    case Expr::Kind::Call:
      os << e.name << '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) os << ", ";
        print_expr(os, e.args[i]);
      }
      os << ')';
      break;
  }
}

}  // namespace

std::string pretty_print(const Ast& ast) {
  std::ostringstream os;
  for (const Stmt& s : ast) {
    switch (s.kind) {
      case Stmt::Kind::Decl:
        os << s.decl_kind << ' ' << s.name << " = ";
        print_expr(os, *s.expr);
        break;
      case Stmt::Kind::Assert:
        os << "assert ";
        print_expr(os, *s.expr);
        break;
      case Stmt::Kind::Print:
        os << "print " << s.name;
        break;
      case Stmt::Kind::Render:
        os << "render \"" << s.name << '"';
        for (const Rat& r : s.probe_args) os << ' ' << r;
        break;
      case Stmt::Kind::Probe:
        os << "probe " << s.name << ' ' << s.probe_args[0];
        break;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace pgeo::script
