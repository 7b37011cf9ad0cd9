#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using gnoe::cli::cli_run;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run result;
  result.code = cli_run(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::string config_path(const char* name) { return std::string(GNOE_TEST_CONFIG_DIR) + "/" + name; }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("mul under Y -> Y^2") {
  const auto r = run({"--format", "machine", "mul", "--ring", "poly(gf(2,1))", "--sigma", "substitution(2)", "X", "(Y)"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "product=(Y^2)X"));
}

TEST_CASE("divide reports a remainder and certificate") {
  const auto r = run({"--format", "machine", "divide", "--ring", "gf(2,1)", "--gen", "X^2+1", "X^3+X^2"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "remainder=1 + X"));
}

TEST_CASE("check-gnoe on the skew config") {
  const auto r = run({"--format", "machine", "check-gnoe", "--config", config_path("skew_endo.json")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "verdict=not_gnoe"));
  CHECK(has_line(r.out, "witness=Y"));
}

TEST_CASE("classify on a config") {
  const auto r = run({"--format", "machine", "classify", "--config", config_path("f4_frobenius.json")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "class=ore"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  const auto bad = run({"--format", "machine", "classify", "--config", config_path("bad_sigma.json")});
  CHECK(bad.code == 2);
  CHECK(has_line(bad.out, "error=ConfigError"));
  const auto syntax = run({"mul", "--ring", "gf(2,1)", "X^", "X"});
  CHECK(syntax.code == 2);
  const auto zero = run({"--format", "machine", "cayley", "--mu", "0"});
  CHECK(zero.code == 1);
  CHECK(has_line(zero.out, "error=ZeroParameter"));
  const auto right = run({"--format", "machine", "divide", "--ring", "poly(gf(2,1))", "--sigma", "substitution(2)",
                          "--side", "right", "--gen", "X", "X^2"});
  CHECK(right.code == 1);
}

TEST_CASE("machine output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"--format", "machine", "demo", "skew-endo-chain"},
      {"--format", "machine", "demo", "flipped-chain"},
      {"--format", "machine", "cayley", "--levels", "3"},
      {"--format", "machine", "check-gnoe", "--config", config_path("f8_frobenius.json")},
      {"--format", "machine", "classify", "--config", config_path("quaternion_flipped.json")},
  };
  for (const auto& args : commands) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("schema=", 0) == 0);
  }
}

TEST_CASE("human format") {
  const auto r = run({"cayley", "--levels", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("schema=") == std::string::npos);
}
