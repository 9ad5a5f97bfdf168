#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cgn/gallery.hpp"
#include "cgn/script.hpp"
#include "cgn/suites.hpp"

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

long default_depth() {
  if (const char* env = std::getenv("CGN_DEPTH")) {
    char* end = nullptr;
    long d = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && d >= 8) return d;
    std::cerr << "ignoring CGN_DEPTH=" << env << " (expected an integer >= 8)\n";
  }
  return 64;
}

bool read_file(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    out = os.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream os;
  os << in.rdbuf();
  out = os.str();
  return true;
}

int cmd_eval(const std::string& path, bool json, const std::string& expect, long depth) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "cannot read " << path << "\n";
    return kUsage;
  }
  cgn::script::Session s;
  s.depth = depth;
  nlohmann::json rep = cgn::script::eval_script(s, text);
  std::string out;
  if (json) {
    out = rep.dump(2) + "\n";
  } else {
    for (const auto& en : rep["results"]) out += cgn::script::render_text(en) + "\n";
  }
  std::cout << out;
  if (!expect.empty()) {
    std::string want;
    if (!read_file(expect, want)) {
      std::cerr << "cannot read " << expect << "\n";
      return kUsage;
    }
    if (want != out) {
      std::cerr << "report differs from " << expect << "\n";
      return kFailed;
    }
  }
  for (const auto& en : rep["results"]) {
    if (!en.value("ok", false)) return kFailed;
  }
  return kOk;
}

int cmd_repl(long depth) {
  cgn::script::Session s;
  s.depth = depth;
  bool tty = isatty(STDIN_FILENO) != 0;
  std::string line;
  int n = 0;
  while (true) {
    if (tty) std::cout << "cgn> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    ++n;
    std::vector<cgn::script::Statement> sts;
    try {
      sts = cgn::script::parse_line(line, n);
    } catch (const cgn::Error& e) {
      std::cout << e.kind << ": " << e.what() << "\n";
      continue;
    }
    for (const auto& st : sts) std::cout << cgn::script::render_text(cgn::script::eval_statement(s, st)) << "\n";
  }
  return kOk;
}

int cmd_check(const std::string& suite, std::uint64_t seed, long depth, bool json) {
  std::vector<std::string> names = suite == "all" ? cgn::suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  for (const std::string& n : names) {
    cgn::SuiteReport r = cgn::run_suite(n, seed, depth);
    ok = ok && r.ok();
    if (json) all.push_back(r.to_json());
    else std::cout << r.summary() << "\n";
  }
  if (json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and ideal calculus for Colombeau generalized numbers"};
  app.require_subcommand(1);
  long depth = default_depth();

  std::string file, expect;
  bool json = false;
  auto* eval = app.add_subcommand("eval", "Evaluate a script file ('-' reads standard input)");
  eval->add_option("file", file, "Script path")->required();
  eval->add_flag("--json", json, "Emit the JSON report");
  eval->add_option("--expect", expect, "Compare the output with this file");
  eval->add_option("--depth", depth, "Oracle sampling depth")->check(CLI::Range(8L, 1024L));

  auto* repl = app.add_subcommand("repl", "Read statements interactively");
  repl->add_option("--depth", depth, "Oracle sampling depth")->check(CLI::Range(8L, 1024L));

  std::string suite;
  std::uint64_t seed = 0;
  auto* check = app.add_subcommand("check", "Run a property suite ('all' runs every suite)");
  check->add_option("suite", suite, "Suite name")->required();
  check->add_option("--seed", seed, "Random seed");
  check->add_option("--depth", depth, "Oracle sampling depth")->check(CLI::Range(8L, 1024L));
  check->add_flag("--json", json, "Emit the JSON report");

  std::string name, mode = "real";
  auto* gallery = app.add_subcommand("gallery", "Print a gallery element");
  gallery->add_option("name", name, "Element name")->required();
  gallery->add_option("--mode", mode, "real or complex")->check(CLI::IsMember({"real", "complex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(file, json, expect, depth);
    if (*repl) return cmd_repl(depth);
    if (*check) return cmd_check(suite, seed, depth, json);
    if (*gallery) {
      std::cout << cgn::gallery_named(name, mode == "real" ? cgn::Mode::R : cgn::Mode::C).to_string() << "\n";
      return kOk;
    }
  } catch (const cgn::Error& e) {
    std::cerr << e.kind << ": " << e.what() << "\n";
    return e.kind == "UnknownSuite" || e.kind == "UnknownIdentifier" || e.kind == "DomainError" ? kUsage : kFailed;
  }
  return kUsage;
}
