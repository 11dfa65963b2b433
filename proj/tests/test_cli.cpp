#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dgt/cli.hpp"
#include "dgt/config.hpp"
#include "dgt/report.hpp"

using namespace dgt;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("config parsing") {
  auto table = parse_config(R"(
# sequence data
seq = { prefix = ["4x+6"], period = ["3+2x"] }
caps = { stage = 64, mult = 65536 }
flag = true
names = ["a", "b"]
)");
  auto seq = sequence_from_config(table.at("seq").as_table());
  CHECK(seq->prefix_size() == 1);
  CHECK(seq->is_periodic());
  CHECK(seq->entry(1) == parse_poly("4x+6"));
  CHECK(seq->entry(2) == parse_poly("3+2x"));
  CHECK(table.at("caps").as_table().at("stage").as_int() == 64);
  CHECK(table.at("flag").as_bool());
  CHECK(table.at("names").as_array().size() == 2);
  CHECK_THROWS_AS(parse_config("key = "), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("= 3"), std::invalid_argument);
}

TEST_CASE("certify exit codes") {
  CHECK(run({"certify", "--seq", "3+2x"}).code == 0);
  CHECK(run({"certify", "--seq", "2+2x"}).code == 1);
  CHECK(run({"certify", "--seq", "1+x"}).code == 2);
  CHECK(run({"certify"}).code == 3);
  CHECK(run({"certify", "--seq", "not a poly"}).code == 3);
}

TEST_CASE("certify structured output round-trips") {
  auto res = run({"certify", "--seq", "3+2x", "--format", "structured"});
  CHECK(res.code == 0);
  CertReport parsed = parse_cert_report(res.out);
  CHECK(parsed.classification == Classification::AntiFD);

  auto seq = sequence_from_string("3+2x");
  CHECK(cert_report_equal(parsed, antifd_verdict(*seq)));
}

TEST_CASE("deterministic output") {
  auto a = run({"certify", "--seq", "3+2x"});
  auto b = run({"certify", "--seq", "3+2x"});
  CHECK(a.out == b.out);
  auto t1 = run({"tree", "--weights", "2,3", "--depth", "2", "--export-dot"});
  auto t2 = run({"tree", "--weights", "2,3", "--depth", "2", "--export-dot"});
  CHECK(t1.out == t2.out);
}

TEST_CASE("traces subcommand") {
  auto res = run({"traces", "--seq", "3+2x", "--element", "x", "--stage", "1", "--at",
                  "1,2/3", "--range", "3"});
  CHECK(res.code == 0);
  CHECK(res.out.find("tau_0 = 0") != std::string::npos);
  CHECK(res.out.find("tau_infty = 1/2") != std::string::npos);
  CHECK(res.out.find("tau(1) = 1/5") != std::string::npos);
  CHECK(res.out.find("multipliers = 3 3 3") != std::string::npos);
  CHECK(res.out.find("multipliers = 2 2 2") != std::string::npos);
}

TEST_CASE("initial-hom subcommand") {
  auto res = run({"initial-hom", "--pairs", "5,2;17,2", "--dim", "1", "--stages", "2",
                  "--verify"});
  CHECK(res.code == 0);
  CHECK(res.out.find("recurrences exact") != std::string::npos);
  // a non-coprime pair is a usage error
  CHECK(run({"initial-hom", "--pairs", "4,2", "--dim", "1", "--stages", "1"}).code == 3);
}

TEST_CASE("tree subcommand writes DOT") {
  auto res = run({"tree", "--weights", "2,3", "--depth", "2", "--export-dot", "--check"});
  CHECK(res.code == 0);
  CHECK(res.out.find("digraph bratteli") != std::string::npos);
  CHECK(res.out.find("initial-object condition: holds") != std::string::npos);

  auto bad = run({"tree", "--weights", "2,4", "--depth", "2", "--check"});
  CHECK(bad.code == 1);
}

TEST_CASE("config file input") {
  const char* path = "cli_test_config.txt";
  {
    std::ofstream f(path);
    f << "seq = { period = [\"3+2x\"] }\n";
  }
  auto res = run({"certify", "--config", path});
  CHECK(res.code == 0);
  std::remove(path);
  CHECK(run({"certify", "--config", "missing_file.txt"}).code == 3);

  // unknown keys are rejected, not ignored
  {
    std::ofstream f(path);
    f << "seq = { period = [\"3+2x\"], extra = 1 }\n";
  }
  CHECK(run({"certify", "--config", path}).code == 3);
  std::remove(path);
}

TEST_CASE("verdict serialization round-trips") {
  auto seq = sequence_from_string("3+2x");
  Verdict v = is_positive(make_element(seq, parse_poly("x"), 1));
  CHECK(verdict_equal(v, parse_verdict(serialize_verdict(v))));

  Verdict f = is_positive(make_element(seq, parse_poly("3-2x"), 1));
  CHECK(verdict_equal(f, parse_verdict(serialize_verdict(f))));

  Verdict u = Verdict::unknown(64);
  CHECK(verdict_equal(u, parse_verdict(serialize_verdict(u))));

  Verdict with_mult = is_order_unit(make_element(seq, parse_poly("1+x"), 1), SearchCaps{8, 16});
  CHECK(verdict_equal(with_mult, parse_verdict(serialize_verdict(with_mult))));
}

TEST_CASE("lab and approx subcommands") {
  auto lab = run({"lab", "--example24", "4"});
  CHECK(lab.code == 1);  // non-discrete
  CHECK(lab.out.find("z-rank = 4") != std::string::npos);
  CHECK(lab.out.find("1/8 * Z") != std::string::npos);

  auto approx = run({"approx", "--target", "2", "--interval", "1/3,2/3", "--eps", "1/20",
                     "--degree", "4", "--height", "8"});
  CHECK(approx.code == 0);
  CHECK(approx.out.find("certified sup error <= 0") != std::string::npos);
}
