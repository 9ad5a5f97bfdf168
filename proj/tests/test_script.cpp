#include "doctest.h"

#include "cgn/script.hpp"
#include "cgn/suites.hpp"

using namespace cgn;
using namespace cgn::script;

namespace {

json run(const std::string& text) {
  Session s;
  return eval_script(s, text)["results"];
}

std::string roundtrip(const std::string& src) { return print(parse_line(src, 1).at(0)); }

std::string error_kind(const std::string& src) {
  for (const auto& en : run(src)) {
    if (!en["ok"].get<bool>()) return en["error"]["kind"];
  }
  return "";
}

}  // namespace

TEST_CASE("lexing") {
  auto toks = lex("let b2 = eps^(3/2)*bK");
  REQUIRE(toks.size() >= 10);
  CHECK(toks[0].kind == Token::Kind::Ident);
  CHECK(toks[1].text == "b2");
  auto v = lex(":in y in cl(bK) --depth 8");
  CHECK(v[0].kind == Token::Kind::Verb);
  CHECK(v[0].text == "in");
  bool option = false;
  for (const auto& t : v) option = option || (t.kind == Token::Kind::Option && t.text == "depth");
  CHECK(option);
  CHECK_THROWS_AS(lex("let x = 3 $ 4"), Error);
}

TEST_CASE("parsing statements") {
  auto st = parse_line("let b = graded(nu2, i -> i+1)", 1);
  REQUIRE(st.size() == 1);
  CHECK(st[0].kind == Statement::Kind::Let);
  CHECK(st[0].name == "b");
  REQUIRE(st[0].expr);
  CHECK(st[0].expr->kind == Expr::Kind::Call);
  CHECK(st[0].expr->args[1]->kind == Expr::Kind::Lambda);
  CHECK(print(st[0]) == "let b = graded(nu2, i -> i + 1)");

  auto q = parse_line("(:val eps^3)", 4);
  REQUIRE(q.size() == 1);
  CHECK(q[0].kind == Statement::Kind::Query);
  CHECK(q[0].name == "val");
  CHECK(q[0].parenthesized);
  CHECK(q[0].line == 4);
  CHECK(q[0].args[0]->kind == Expr::Kind::Binary);
  CHECK(q[0].args[0]->text == "^");

  auto in = parse_line(":in y in cl(bK)", 1);
  REQUIRE(in.size() == 1);
  CHECK(in[0].in_form);
  REQUIRE(in[0].args.size() == 2);
  CHECK(in[0].args[1]->args[0]->kind == Expr::Kind::Principal);

  CHECK(parse_line("mode complex; :val i # comment", 1).size() == 2);
  CHECK(parse_line("# only a comment", 1).empty());
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse("let = 3");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.kind == "SyntaxError");
    CHECK(std::string(e.what()).find("line 1, col 5") != std::string::npos);
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
  }
  CHECK_THROWS_AS(parse(":val (eps"), Error);
  CHECK_THROWS_AS(parse(":bogus eps"), Error);
  CHECK_THROWS_AS(parse("let xK = 1"), Error);
  CHECK_THROWS_AS(parse(std::string(500, '(') + "1" + std::string(500, ')')), Error);
}

TEST_CASE("printer uses minimal parentheses") {
  CHECK(roundtrip("let x = (a+b)*c") == "let x = (a + b)*c");
  CHECK(roundtrip("let x = a-(b-c)") == "let x = a - (b - c)");
  CHECK(roundtrip("let x = (a-b)-c") == "let x = a - b - c");
  CHECK(roundtrip("let x = 2^3^4") == "let x = 2^3^4");
  CHECK(roundtrip("let x = (2^3)^4") == "let x = (2^3)^4");
  CHECK(roundtrip("let x = e{blocks(0,2) | ~grid(0,1)}") == "let x = e{blocks(0, 2) | ~grid(0, 1)}");
  CHECK(roundtrip(":in x in (b)K + e{full}K") == ":in x in bK + e{full}K");
  for (const char* src : {"let x = -(a + b)*c", "let x = eps^(-1)", "let x = a/(b*c)", ":val --x",
                          "let g = graded(nu2sq, (i, j) -> i + 2*j + 1)", ":oracle eps --depth 16",
                          ":levels b, 3", "(:ann-witness 1, b)"}) {
    std::string once = roundtrip(src);
    CHECK(roundtrip(once) == once);
  }
}

TEST_CASE("golden script is canonical") {
  const std::string& text = golden_script();
  CHECK(std::count(text.begin(), text.end(), '\n') >= 50);
  CHECK(print(parse(text)) == text);
}

TEST_CASE("evaluation of queries") {
  json r = run(":val eps^3");
  REQUIRE(r.size() == 1);
  CHECK(r[0]["ok"] == true);
  CHECK(r[0]["value"] == "3");

  json c = run("let b = graded(nu2, i -> i + 1)\nlet y = witness(b)\n:in y in cl(bK)\n:in y in bK");
  REQUIRE(c.size() == 4);
  CHECK(c[2]["result"] == true);
  CHECK(c[2]["certificate"].contains("level"));
  CHECK(c[2]["certificate"].contains("level_set"));
  CHECK(c[3]["result"] == false);

  json cl = run(":clean eps");
  CHECK(cl[0]["invertible"] == true);
  CHECK(cl[0].contains("set"));

  json g = run(":gcd eps^3, e{blocks(0, 2)}*eps");
  CHECK(g[0].contains("g"));
  CHECK(g[0].contains("r"));
  CHECK(g[0].contains("s"));

  json o = run(":oracle eps^2 --depth 32 --csv");
  CHECK(o[0]["concordant"] == true);
  CHECK(o[0]["csv"].get<std::string>().rfind("block,eps,re,im,log2_abs", 0) == 0);
}

TEST_CASE("structured errors") {
  CHECK(error_kind(":val zz") == "UnknownIdentifier");
  CHECK(error_kind(":val i") == "ModeError");
  CHECK(error_kind("mode complex\n:val i") == "");
  CHECK(error_kind(":val e{eps}") == "TypeMismatch");
  CHECK(error_kind(":val blocks(0, 2)") == "TypeMismatch");
  CHECK(error_kind("let g = graded(nu2sq, (i, j) -> i*j)") == "TypeMismatch");
  CHECK(error_kind(":val eps^1000") == "ResourceLimit");
  CHECK(error_kind(":val eps +") == "SyntaxError");
  CHECK(error_kind(":val 1/0") != "");
  CHECK(error_kind(":val eps --depth 3") == "UnknownOption");

  json r = run(":val zz\n:val eps");
  REQUIRE(r.size() == 2);
  CHECK(r[0]["ok"] == false);
  CHECK(r[1]["ok"] == true);
}

TEST_CASE("reports are deterministic") {
  const std::string text = "let b = graded(nu2, i -> i + 1)\n:decompose b\n:oracle b --depth 16\n:ann-witness 1, b";
  Session a, b;
  CHECK(eval_script(a, text).dump() == eval_script(b, text).dump());
  json rep = eval_script(a, text);
  CHECK(rep["schema"] == kSchema);
  CHECK(render_text(rep["results"][1]).find("=>") != std::string::npos);
}

TEST_CASE("suites") {
  CHECK_THROWS_WITH_AS(run_suite("nonexistent"), doctest::Contains("nonexistent"), Error);
  SuiteReport r = run_suite("gallery");
  CHECK(r.ok());
  CHECK(r.to_json()["suite"] == "gallery");
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    Session s;
    s.depth = 16;
    CHECK_NOTHROW(eval_script(s, fuzz_script(rng)));
  }
}
