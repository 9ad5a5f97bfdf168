#include <array>

#include "cgn/script.hpp"
#include "cgn/suites.hpp"

#include "cgn_golden.inc"

namespace cgn {

const std::string& golden_script() {
  static const std::string s = kGoldenScript;
  return s;
}

const std::string& golden_report() {
  static const std::string s = kGoldenReport;
  return s;
}

namespace {

template <std::size_t N>
const char* pick(std::mt19937_64& rng, const std::array<const char*, N>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng)];
}

long roll(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::string set_expr(std::mt19937_64& rng, int depth) {
  static const std::array<const char*, 12> atoms{
      "full", "empty", "blocks(0, 2)", "blocks(1, 2)", "grid(0, 1)", "grid(1, 3)",
      "nu2(1)", "nu2ge(2)", "interval(1/8, 1/2)", "nu2sq(0, 1)", "rowtail(1, 0)", "support(eps^2)"};
  if (depth <= 0 || roll(rng, 0, 2) == 0) return pick(rng, atoms);
  switch (roll(rng, 0, 4)) {
    case 0: return set_expr(rng, depth - 1) + " | " + set_expr(rng, depth - 1);
    case 1: return set_expr(rng, depth - 1) + " & " + set_expr(rng, depth - 1);
    case 2: return "~" + set_expr(rng, 0);
    case 3: return "level(b, " + std::to_string(roll(rng, 0, 4)) + ")";
    default: return "clean(" + std::string(roll(rng, 0, 1) ? "eps - 1" : "b") + ")";
  }
}

std::string num_expr(std::mt19937_64& rng, int depth) {
  static const std::array<const char*, 14> atoms{
      "eps", "1", "2/3", "-5", "b", "x", "i", "gallery(beta2)", "gamma", "beta",
      "graded(nu2, i -> i^2 + 1)", "graded(nu2sq, (i, j) -> i + 2*j + 1)", "e{blocks(0, 2)}", "0"};
  if (depth <= 0 || roll(rng, 0, 2) == 0) return pick(rng, atoms);
  switch (roll(rng, 0, 9)) {
    case 0: return num_expr(rng, depth - 1) + " + " + num_expr(rng, depth - 1);
    case 1: return num_expr(rng, depth - 1) + " - " + num_expr(rng, depth - 1);
    case 2: return num_expr(rng, depth - 1) + "*" + num_expr(rng, depth - 1);
    case 3: return num_expr(rng, depth - 1) + "/" + num_expr(rng, depth - 1);
    case 4: return "(" + num_expr(rng, depth - 1) + ")^" + std::to_string(roll(rng, -3, 5));
    case 5: return "e{" + set_expr(rng, 1) + "}";
    case 6: return std::string(pick(rng, std::array<const char*, 6>{"abs", "abs2", "conj", "inv", "skel", "witness"})) +
                   "(" + num_expr(rng, depth - 1) + ")";
    case 7: return std::string(roll(rng, 0, 1) ? "max" : "min") + "(" + num_expr(rng, depth - 1) + ", " +
                   num_expr(rng, depth - 1) + ")";
    case 8: return "root(" + num_expr(rng, depth - 1) + ", " + std::to_string(roll(rng, 0, 4)) + ")";
    default: return "-" + num_expr(rng, 0);
  }
}

std::string ideal_expr(std::mt19937_64& rng, int depth) {
  if (depth <= 0 || roll(rng, 0, 2) == 0) {
    std::string n = num_expr(rng, 0);
    return n == "b" || n == "x" ? n + "K" : "(" + n + ")K";
  }
  switch (roll(rng, 0, 6)) {
    case 0: return ideal_expr(rng, depth - 1) + " + " + ideal_expr(rng, depth - 1);
    case 1: return ideal_expr(rng, depth - 1) + "*" + ideal_expr(rng, depth - 1);
    case 2: return ideal_expr(rng, depth - 1) + "^" + ideal_expr(rng, depth - 1);
    case 3: return "rad(" + ideal_expr(rng, depth - 1) + ")";
    case 4: return "cl(" + ideal_expr(rng, depth - 1) + ")";
    case 5: return "zcl(" + ideal_expr(rng, depth - 1) + ")";
    default: return "ann(" + num_expr(rng, 1) + ")";
  }
}

std::string statement(std::mt19937_64& rng) {
  auto n = [&] { return num_expr(rng, 2); };
  auto s = [&] { return set_expr(rng, 2); };
  switch (roll(rng, 0, 27)) {
    case 0: return "let x = " + n();
    case 1: return "let b = graded(nu2, i -> i + 1)";
    case 2: return std::string("mode ") + (roll(rng, 0, 1) ? "real" : "complex");
    case 3: return ":val " + n();
    case 4: return ":show " + n();
    case 5: return ":eq " + n() + ", " + n();
    case 6: return ":leq " + n() + ", " + n();
    case 7: return ":classify " + n();
    case 8: return ":invert " + n();
    case 9: return ":set " + s();
    case 10: return ":germ " + s() + ", " + s();
    case 11: return ":clean " + n();
    case 12: return ":split " + n() + ", " + n();
    case 13: return ":gcd " + n() + ", " + n();
    case 14: return ":levels " + n();
    case 15: return ":stationary " + n();
    case 16: return ":in " + n() + " in " + ideal_expr(rng, 2);
    case 17: return ":rad-in " + n() + ", " + n();
    case 18: return ":closure-in " + n() + " in " + ideal_expr(rng, 1);
    case 19: return ":ann-witness " + n() + ", " + n();
    case 20: return ":decompose " + n();
    case 21: return ":pure " + n();
    case 22: return ":qval " + n() + ", " + s();
    case 23: return ":qequiv " + n() + ", " + n() + ", " + s();
    case 24: return ":oracle " + n() + " --depth " + std::to_string(roll(rng, 4, 24));
    case 25: return ":pseudoprime " + ideal_expr(rng, 1) + ", " + s();
    case 26: return ":ortho " + s() + ", " + n();
    default: return ":meet " + n() + ", " + n();
  }
}

void mutate(std::mt19937_64& rng, std::string& line) {
  static const std::string junk = "()[]{}+-*/^|&~:,;#-><=KeIi0123456789. \"'\\\x01\xff";
  long edits = roll(rng, 1, 3);
  for (long k = 0; k < edits; ++k) {
    std::size_t pos = line.empty() ? 0 : static_cast<std::size_t>(roll(rng, 0, static_cast<long>(line.size())));
    switch (roll(rng, 0, 2)) {
      case 0:
        if (pos < line.size()) line.erase(pos, 1);
        break;
      case 1: line.insert(pos, 1, junk[static_cast<std::size_t>(roll(rng, 0, static_cast<long>(junk.size()) - 1))]); break;
      default:
        if (pos < line.size()) line[pos] = junk[static_cast<std::size_t>(roll(rng, 0, static_cast<long>(junk.size()) - 1))];
        break;
    }
  }
}

}  // namespace

std::string fuzz_script(std::mt19937_64& rng) {
  std::string out = roll(rng, 0, 3) ? "let b = graded(nu2, i -> i + 1)\n" : "";
  long lines = roll(rng, 1, 4);
  for (long k = 0; k < lines; ++k) {
    std::string line = statement(rng);
    if (roll(rng, 0, 9) == 0) line = "(" + line + ")";
    if (roll(rng, 0, 3) == 0) mutate(rng, line);
    if (roll(rng, 0, 19) == 0) line = std::string(static_cast<std::size_t>(roll(rng, 1, 400)), '(') + line;
    out += line + (roll(rng, 0, 7) == 0 ? "; " : "\n");
  }
  return out;
}

}  // namespace cgn
