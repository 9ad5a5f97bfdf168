#pragma once

// Script language: let-bindings, a session mode switch and ':'-prefixed
// queries over generalized numbers, index sets and ideals.
//
//   let b = graded(nu2, i -> i+1)
//   let y = witness(b)
//   :in y in cl(bK)
//   (:val eps^3)

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgn/gennum.hpp"
#include "cgn/ideal.hpp"

namespace cgn::script {

using json = nlohmann::json;

struct Token {
  enum class Kind { Ident, Number, Verb, Option, Sym, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1, col = 1;
  bool space_before = false;
};

/// Splits one statement's text; throws SyntaxError.
std::vector<Token> lex(const std::string& src, int line = 1);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Ident, Call, Unary, Binary, Idempotent, Lambda, Principal };
  Kind kind = Kind::Number;
  std::string text;  // literal, identifier, operator or callee
  std::vector<ExprPtr> args;
  std::vector<std::string> params;  // lambda parameters
  int line = 1, col = 1;
};

struct Option {
  std::string name;
  std::optional<std::string> value;
};

struct Statement {
  enum class Kind { Let, Mode, Query };
  Kind kind = Kind::Query;
  std::string name;  // bound identifier, mode word or verb
  ExprPtr expr;      // let right-hand side
  std::vector<ExprPtr> args;
  bool in_form = false;        // first two arguments joined by 'in'
  bool parenthesized = false;  // written as (:verb ...)
  std::vector<Option> options;
  int line = 1;
};

struct Script {
  std::vector<Statement> statements;
};

/// Statements of one source line (separated by ';').
std::vector<Statement> parse_line(const std::string& text, int line);
/// Whole script; throws on the first SyntaxError.
Script parse(const std::string& text);

std::string print(const Expr& e);
std::string print(const Statement& s);
std::string print(const Script& s);

const std::vector<std::string>& verbs();

struct Session {
  Mode mode = Mode::R;
  long depth = 64;
  struct Binding;
  std::map<std::string, std::shared_ptr<Binding>> env;
};

/// Evaluates one statement into a report entry; never throws for library
/// failures, which become {"ok": false, "error": {...}} entries.
json eval_statement(Session& s, const Statement& st);
/// {"schema": "cgn-report/1", "results": [...]}, one entry per statement or
/// per line that fails to parse.
json eval_script(Session& s, const std::string& text);
/// One human-readable line per report entry.
std::string render_text(const json& entry);

inline constexpr const char* kSchema = "cgn-report/1";

}  // namespace cgn::script
