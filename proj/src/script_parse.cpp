#include <algorithm>
#include <cctype>

#include "cgn/script.hpp"

namespace cgn::script {

namespace {

[[noreturn]] void syntax_error(int line, int col, const std::string& what) {
  throw Error("SyntaxError", "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = {
      "val",       "show",   "eq",       "leq",         "classify",   "invert",      "invert-on",
      "set",       "germ",   "clean",    "split",       "gcd",        "meet",        "root",
      "skeleton",  "levels", "stationary", "in",        "rad-in",     "closure-in",  "zclosure-in",
      "ann",       "ann-witness", "ortho", "decompose", "pure",       "pseudoprime", "qequiv",
      "qval",      "gallery", "oracle",  "annsplit"};
  return v;
}

std::vector<Token> lex(const std::string& src, int line) {
  std::vector<Token> out;
  std::size_t k = 0;
  bool space = true;
  auto col = [&](std::size_t at) { return static_cast<int>(at) + 1; };
  while (k < src.size()) {
    char c = src[k];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      space = true;
      ++k;
      continue;
    }
    if (c == '#') break;
    Token t;
    t.line = line;
    t.col = col(k);
    t.space_before = space;
    std::size_t start = k;
    if (ident_start(c)) {
      while (k < src.size() && ident_char(src[k])) ++k;
      t.kind = Token::Kind::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
      if (k + 1 < src.size() && src[k] == '.' && std::isdigit(static_cast<unsigned char>(src[k + 1]))) {
        ++k;
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
      }
      t.kind = Token::Kind::Number;
    } else if (c == ':') {
      ++k;
      if (k >= src.size() || !std::isalpha(static_cast<unsigned char>(src[k]))) syntax_error(line, t.col, "expected a verb after ':'");
      while (k < src.size() && (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '-')) ++k;
      t.kind = Token::Kind::Verb;
      start += 1;
    } else if (c == '-' && k + 2 < src.size() && src[k + 1] == '-' && std::isalpha(static_cast<unsigned char>(src[k + 2]))) {
      k += 2;
      while (k < src.size() && (ident_char(src[k]) || src[k] == '-')) ++k;
      t.kind = Token::Kind::Option;
      start += 2;
    } else if (c == '-' && k + 1 < src.size() && src[k + 1] == '>') {
      k += 2;
      t.kind = Token::Kind::Sym;
    } else if (std::string("+-*/^(){},=|&~;").find(c) != std::string::npos) {
      ++k;
      t.kind = Token::Kind::Sym;
    } else {
      syntax_error(line, t.col, std::string("unexpected character '") + c + "'");
    }
    t.text = src.substr(start, k - start);
    out.push_back(std::move(t));
    space = false;
  }
  Token end;
  end.line = line;
  end.col = col(src.size());
  end.space_before = true;
  out.push_back(end);
  return out;
}

namespace {

int infix_power(const Token& t) {
  if (t.kind != Token::Kind::Sym) return -1;
  if (t.text == "|") return 10;
  if (t.text == "&") return 20;
  if (t.text == "+" || t.text == "-") return 30;
  if (t.text == "*" || t.text == "/") return 40;
  if (t.text == "^") return 60;
  return -1;
}

constexpr int kPrefixPower = 50;
constexpr int kPostfixPower = 70;
constexpr int kAtomPower = 100;

ExprPtr make(Expr::Kind k, std::string text, std::vector<ExprPtr> args, const Token& at) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->text = std::move(text);
  e->args = std::move(args);
  e->line = at.line;
  e->col = at.col;
  return e;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<Statement> statements() {
    std::vector<Statement> out;
    while (!at_end()) {
      if (is_sym(";")) {
        next();
        continue;
      }
      out.push_back(statement());
      if (!at_end() && !is_sym(";")) fail("';' or end of line");
    }
    return out;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int nesting_ = 0;
  static constexpr int kMaxNesting = 128;

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_sym(const char* s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Sym && peek(ahead).text == s;
  }
  bool is_ident(const char* s) const { return peek().kind == Token::Kind::Ident && peek().text == s; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == Token::Kind::End ? "end of line" : "'" + t.text + "'";
    syntax_error(t.line, t.col, "expected " + expected + ", found " + found);
  }

  void expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("'") + s + "'");
    next();
  }

  std::string ident() {
    if (peek().kind != Token::Kind::Ident) fail("identifier");
    return next().text;
  }

  Statement statement() {
    Statement st;
    st.line = peek().line;
    if (is_ident("let")) {
      next();
      st.kind = Statement::Kind::Let;
      st.name = ident();
      if (st.name.size() > 1 && st.name.back() == 'K') {
        syntax_error(peek().line, peek().col, "names ending in 'K' are reserved for principal ideals");
      }
      if (st.name == "in" || st.name == "let" || st.name == "mode" || st.name == "K") fail("a non-reserved name");
      expect_sym("=");
      st.expr = expr(0);
      return st;
    }
    if (is_ident("mode")) {
      next();
      st.kind = Statement::Kind::Mode;
      st.name = ident();
      if (st.name != "real" && st.name != "complex") syntax_error(st.line, peek().col, "expected 'real' or 'complex'");
      return st;
    }
    if (is_sym("(") && peek(1).kind == Token::Kind::Verb) {
      next();
      query(st);
      st.parenthesized = true;
      expect_sym(")");
      return st;
    }
    if (peek().kind == Token::Kind::Verb) {
      query(st);
      return st;
    }
    fail("'let', 'mode' or a query");
  }

  void query(Statement& st) {
    const Token& v = next();
    st.kind = Statement::Kind::Query;
    st.name = v.text;
    const auto& vs = verbs();
    if (std::find(vs.begin(), vs.end(), st.name) == vs.end()) syntax_error(v.line, v.col, "unknown verb ':" + v.text + "'");
    auto arg_start = [&] {
      return !at_end() && !is_sym(";") && !is_sym(")") && peek().kind != Token::Kind::Option;
    };
    if (arg_start()) {
      st.args.push_back(expr(0));
      while (true) {
        if (is_sym(",")) {
          next();
        } else if (is_ident("in") && st.args.size() == 1) {
          next();
          st.in_form = true;
        } else {
          break;
        }
        st.args.push_back(expr(0));
      }
    }
    while (peek().kind == Token::Kind::Option) {
      Option o{next().text, std::nullopt};
      if (peek().kind == Token::Kind::Number || (peek().kind == Token::Kind::Ident && !is_ident("in"))) {
        o.value = next().text;
      }
      st.options.push_back(std::move(o));
    }
  }

  ExprPtr expr(int min_power) {
    ExprPtr lhs = prefix();
    while (true) {
      const Token& t = peek();
      if (t.kind == Token::Kind::Ident && t.text == "K" && !t.space_before) {
        if (kPostfixPower < min_power) break;
        lhs = make(Expr::Kind::Principal, "K", {lhs}, next());
        continue;
      }
      int p = infix_power(t);
      if (p < 0 || p < min_power) break;
      const Token& op = next();
      int rhs_min = op.text == "^" ? p : p + 1;
      ExprPtr rhs = expr(rhs_min);
      lhs = make(Expr::Kind::Binary, op.text, {lhs, rhs}, op);
    }
    return lhs;
  }

  ExprPtr lambda(const Token& at, std::vector<std::string> params) {
    expect_sym("->");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Lambda;
    e->params = std::move(params);
    e->args = {expr(0)};
    e->line = at.line;
    e->col = at.col;
    return e;
  }

  ExprPtr prefix() {
    struct Guard {
      int& d;
      explicit Guard(int& x) : d(++x) {}
      ~Guard() { --d; }
    } guard(nesting_);
    if (nesting_ > kMaxNesting) fail("at most " + std::to_string(kMaxNesting) + " nested subexpressions");
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) return make(Expr::Kind::Number, next().text, {}, t);
    if (is_sym("-") || is_sym("~")) {
      const Token& op = next();
      return make(Expr::Kind::Unary, op.text, {expr(kPrefixPower)}, op);
    }
    if (is_sym("(")) {
      // (i) -> ... or (i, j) -> ...
      if (peek(1).kind == Token::Kind::Ident) {
        if (is_sym(")", 2) && is_sym("->", 3)) {
          const Token& at = next();
          std::string p = next().text;
          next();
          return lambda(at, {p});
        }
        if (is_sym(",", 2) && peek(3).kind == Token::Kind::Ident && is_sym(")", 4) && is_sym("->", 5)) {
          const Token& at = next();
          std::string p = next().text;
          next();
          std::string q = next().text;
          next();
          return lambda(at, {p, q});
        }
      }
      next();
      ExprPtr inner = expr(0);
      expect_sym(")");
      return inner;
    }
    if (t.kind == Token::Kind::Ident) {
      const Token& id = next();
      if (id.text == "in" || id.text == "let" || id.text == "mode" || id.text == "K") {
        syntax_error(id.line, id.col, "expected an expression, found '" + id.text + "'");
      }
      if (is_sym("->")) return lambda(id, {id.text});
      if (id.text == "e" && is_sym("{")) {
        next();
        ExprPtr s = expr(0);
        expect_sym("}");
        return make(Expr::Kind::Idempotent, "e", {s}, id);
      }
      if (is_sym("(")) {
        next();
        std::vector<ExprPtr> args;
        if (!is_sym(")")) {
          args.push_back(expr(0));
          while (is_sym(",")) {
            next();
            args.push_back(expr(0));
          }
        }
        expect_sym(")");
        return make(Expr::Kind::Call, id.text, std::move(args), id);
      }
      if (id.text.size() > 1 && id.text.back() == 'K') {
        ExprPtr var = make(Expr::Kind::Ident, id.text.substr(0, id.text.size() - 1), {}, id);
        return make(Expr::Kind::Principal, "K", {var}, id);
      }
      return make(Expr::Kind::Ident, id.text, {}, id);
    }
    fail("an expression");
  }
};

int power_of(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Binary: return infix_power(Token{Token::Kind::Sym, e.text});
    case Expr::Kind::Unary: return kPrefixPower;
    case Expr::Kind::Lambda: return 0;
    case Expr::Kind::Principal: return kPostfixPower;
    default: return kAtomPower;
  }
}

std::string print_ctx(const Expr& e, int ctx);

std::string wrap(const Expr& e, int ctx) {
  std::string s = print_ctx(e, ctx);
  return power_of(e) < ctx ? "(" + s + ")" : s;
}

std::string print_ctx(const Expr& e, int ctx) {
  (void)ctx;
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Ident:
      return e.text;
    case Expr::Kind::Call: {
      std::string s = e.text + "(";
      for (std::size_t k = 0; k < e.args.size(); ++k) s += (k ? ", " : "") + wrap(*e.args[k], 0);
      return s + ")";
    }
    case Expr::Kind::Idempotent:
      return "e{" + wrap(*e.args[0], 0) + "}";
    case Expr::Kind::Lambda: {
      std::string head = e.params.size() == 1 ? e.params[0] : "(" + e.params[0] + ", " + e.params[1] + ")";
      return head + " -> " + wrap(*e.args[0], 0);
    }
    case Expr::Kind::Unary: {
      const Expr& a = *e.args[0];
      std::string inner = a.kind == Expr::Kind::Unary ? "(" + print_ctx(a, 0) + ")" : wrap(a, kPrefixPower);
      return e.text + inner;
    }
    case Expr::Kind::Principal: {
      const Expr& a = *e.args[0];
      bool bare = a.kind == Expr::Kind::Ident || a.kind == Expr::Kind::Call || a.kind == Expr::Kind::Idempotent ||
                  a.kind == Expr::Kind::Number;
      return (bare ? print_ctx(a, kAtomPower) : "(" + print_ctx(a, 0) + ")") + "K";
    }
    case Expr::Kind::Binary: {
      int p = power_of(e);
      bool right = e.text == "^";
      std::string l = wrap(*e.args[0], right ? p + 1 : p);
      std::string r = wrap(*e.args[1], right ? p : p + 1);
      bool spaced = e.text == "+" || e.text == "-" || e.text == "|" || e.text == "&";
      return spaced ? l + " " + e.text + " " + r : l + e.text + r;
    }
  }
  return "";
}

}  // namespace

std::vector<Statement> parse_line(const std::string& text, int line) { return Parser(lex(text, line)).statements(); }

Script parse(const std::string& text) {
  Script s;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    ++line;
    for (Statement& st : parse_line(text.substr(start, nl - start), line)) s.statements.push_back(std::move(st));
    start = nl + 1;
  }
  return s;
}

std::string print(const Expr& e) { return print_ctx(e, 0); }

std::string print(const Statement& s) {
  switch (s.kind) {
    case Statement::Kind::Let:
      return "let " + s.name + " = " + print(*s.expr);
    case Statement::Kind::Mode:
      return "mode " + s.name;
    case Statement::Kind::Query: {
      std::string q = ":" + s.name;
      for (std::size_t k = 0; k < s.args.size(); ++k) {
        q += k == 0 ? " " : (k == 1 && s.in_form ? " in " : ", ");
        q += print(*s.args[k]);
      }
      for (const Option& o : s.options) q += " --" + o.name + (o.value ? " " + *o.value : "");
      return s.parenthesized ? "(" + q + ")" : q;
    }
  }
  return "";
}

std::string print(const Script& s) {
  std::string out;
  for (const Statement& st : s.statements) out += print(st) + "\n";
  return out;
}

}  // namespace cgn::script
