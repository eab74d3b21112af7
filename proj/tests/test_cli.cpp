#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "quartet/cli.hpp"
#include "quartet/records.hpp"

using namespace quartet;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("table output matches the golden files") {
  for (int t : {1, 2, 3, 4, 7}) {
    CAPTURE(t);
    const Run r = run({"table", std::to_string(t)});
    CHECK(r.out == slurp(std::string(QUARTET_GOLDEN_DIR) + "/table" + std::to_string(t) + ".txt"));
    // Table 2 keeps its misprinted t = 2 row and therefore fails.
    CHECK(r.code == (t == 2 ? kExitFail : kExitOk));
    CHECK(run({"table", std::to_string(t)}).out == r.out);
  }
  const Run t2 = run({"table", "2"});
  CHECK(t2.err.find("row 2 (euler2 at 2)") != std::string::npos);
  CHECK(run({"table", "5"}).code == kExitUsage);
}

TEST_CASE("table rows as records") {
  const Run j = run({"table", "7", "--format", "json"});
  CHECK(j.code == kExitOk);
  const auto js = lines(j.out);
  REQUIRE(js.size() == 33);
  const OutputRecord first = parse_json_line(js[0]);
  CHECK(first.family == "t6_3");
  CHECK(first.param == Rat(7, 4));
  CHECK(first.A == 631);
  CHECK(first.mode == Mode::Canonical);
  const Run c = run({"table", "3", "--format", "csv"});
  CHECK(lines(c.out)[0] == "family,param,A,B,C,D,a,mode");
  CHECK(lines(c.out)[1] == "nega16,1,7,157,-227,239,-1,raw");
}

TEST_CASE("gen") {
  Run r = run({"gen", "--family", "euler1", "--param", "5/3", "--raw"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "A=17332 B=529 C=6673 D=17236 a=1  [euler1 5/3 raw]\n");
  r = run({"gen", "--family", "t6_3", "--param", "1", "--canonical", "--format", "json"});
  CHECK(r.out == R"({"family":"t6_3","param":"1","A":"4","B":"1","C":"2","D":"3","a":"3","mode":"canonical"})"
                 "\n");
  r = run({"gen", "--family", "euler1", "--param", "1", "--raw"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("trivial") != std::string::npos);
  r = run({"gen", "--family", "nega16", "--param", "-1/3", "--format", "csv"});
  CHECK(lines(r.out).at(1) == "nega16,-1/3,89841,27879,-90829,-43307,-1,raw");
  r = run({"gen", "--family", "rho1", "--alpha", "-3/2", "--param", "7/16", "--canonical"});
  CHECK(r.out.rfind("A=10943964 B=1733885 C=10758915 D=5558948 a=1", 0) == 0);

  CHECK(run({"gen", "--family", "nosuch", "--param", "1"}).code == kExitUsage);
  CHECK(run({"gen", "--family", "euler1", "--param", "1/0"}).code == kExitUsage);
  CHECK(run({"gen", "--family", "euler1"}).code == kExitUsage);
  CHECK(run({"gen", "--family", "euler1", "--param", "1", "--raw", "--canonical"}).code == kExitUsage);
  CHECK(run({"gen", "--family", "rho1", "--param", "1"}).code == kExitUsage);
  // (2 alpha + 3) t^2 + 1 = 0 is a pole
  r = run({"gen", "--family", "rho1", "--alpha", "-2", "--param", "1"});
  CHECK(r.code == kExitFail);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("verify") {
  Run r = run({"verify", "--a", "9", "-q", "625,77,85,361"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "residual = 0\nSOLUTION\n");
  r = run({"verify", "--a", "1", "-q", "2,1,1,1"});
  CHECK(r.code == kExitFail);
  CHECK(r.out == "residual = 15\nNOT A SOLUTION\n");
  CHECK(run({"verify", "--a", "-1", "-q", "7,157,-227,239"}).code == kExitOk);
  CHECK(run({"verify", "--a", "-1", "-q", "-257,292,193,-256"}).code == kExitOk);
  CHECK(run({"verify", "--a", "1", "-q", "1,2,3"}).code == kExitUsage);
  CHECK(run({"verify", "--a", "x", "-q", "1,2,3,4"}).code == kExitUsage);
  CHECK(run({"verify", "--a", "0", "-q", "1,2,3,4"}).code == kExitUsage);
}

TEST_CASE("search") {
  Run r = run({"search", "--a", "1", "--bound", "160"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        R"({"family":null,"param":null,"A":"158","B":"59","C":"134","D":"133","a":"1","mode":"canonical"})"
        "\n");
  r = run({"search", "--a", "3", "--bound", "12", "--format", "csv"});
  CHECK(r.out == "family,param,A,B,C,D,a,mode\n,,4,1,2,3,3,canonical\n,,11,2,7,8,3,canonical\n");
  CHECK(run({"search", "--a", "1", "--bound", "0"}).code == kExitUsage);
  CHECK(run({"search", "--a", "1", "--bound", "10", "--workers", "0"}).code == kExitUsage);

  // json-lines and csv carry the same records; worker count changes nothing
  const Run j1 = run({"search", "--a", "-1", "--bound", "120", "--workers", "1"});
  const Run j4 = run({"search", "--a", "-1", "--bound", "120", "--workers", "4"});
  CHECK(j1.out == j4.out);
  const Run c = run({"search", "--a", "-1", "--bound", "120", "--format", "csv"});
  std::vector<OutputRecord> a, b;
  for (const auto& l : lines(j1.out)) a.push_back(parse_json_line(l));
  const auto cl = lines(c.out);
  for (std::size_t i = 1; i < cl.size(); ++i) b.push_back(parse_csv_line(cl[i]));
  CHECK(a == b);
}

TEST_CASE("search refuses an index over the cap") {
  setenv("QUARTET_MAX_INDEX_BYTES", "1000", 1);
  Run r = run({"search", "--a", "1", "--bound", "50"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("QUARTET_MAX_INDEX_BYTES") != std::string::npos);
  CHECK(run({"search", "--a", "1", "--bound", "3"}).code == kExitOk);
  setenv("QUARTET_MAX_INDEX_BYTES", "lots", 1);
  CHECK(run({"search", "--a", "1", "--bound", "3"}).code == kExitUsage);
  unsetenv("QUARTET_MAX_INDEX_BYTES");
}

TEST_CASE("identity") {
  Run r = run({"identity", "all"});
  CHECK(r.code == kExitOk);
  const auto ls = lines(r.out);
  CHECK(ls.size() == 17);
  CHECK(std::all_of(ls.begin(), ls.end(), [](const std::string& l) { return l.rfind("PASS ", 0) == 0; }));
  CHECK(run({"identity", "euler1"}).out == "PASS euler1\n");
  CHECK(run({"identity", "nosuch"}).code == kExitUsage);
}

TEST_CASE("derive") {
  Run r = run({"derive", "--case", "1", "--variant", "linear", "--t", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("z = -24/41\nrho = 17/41\nomega = 50/41\n") != std::string::npos);
  CHECK(r.out.find("quadruple = (158, -59, 133, 134; a=1)") != std::string::npos);
  r = run({"derive", "--case", "2", "--n", "1"});
  CHECK(r.out.find("v = 3\nrho = 13/3\nt = 22/13\n") != std::string::npos);
  CHECK(r.out.find("omega = 267/13\n") != std::string::npos);
  CHECK(r.out.find("quadruple = (7, 157, -227, 239; a=-1)") != std::string::npos);
  r = run({"derive", "--case", "1", "--variant", "quadratic", "--t", "1"});
  CHECK(r.code == kExitFail);
  CHECK(r.err == "error: pole in the quadratic ansatz: (t^2 - 1)^4 = 0\n");
  r = run({"derive", "--case", "2", "--n", "-2"});
  CHECK(r.out.find("quadruple = (-257, 292, 193, -256; a=-1)") != std::string::npos);
  CHECK(run({"derive", "--case", "3", "--t", "1"}).code == kExitUsage);
  CHECK(run({"derive", "--case", "1"}).code == kExitUsage);
}

TEST_CASE("families and help") {
  Run r = run({"families"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("euler2 (t)") != std::string::npos);
  CHECK(r.out.find("q = -t^12 + 214t^10 + 2481t^8 + 2804t^6 + 2481t^4 + 214t^2 - 1") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
}

TEST_CASE("records round-trip") {
  const OutputRecord r{std::string("nega16"), Rat(-1, 3), parse_int("89841"), 27879, -90829, -43307,
                       Rat(-1), Mode::Raw};
  CHECK(parse_json_line(to_json_line(r)) == r);
  CHECK(parse_csv_line(to_csv_line(r)) == r);
  const OutputRecord s{std::nullopt, std::nullopt, parse_int("123456789012345678901234567890"), 0, 1, 2,
                       Rat(7, 9), Mode::Canonical};
  CHECK(parse_json_line(to_json_line(s)) == s);
  CHECK(parse_csv_line(to_csv_line(s)) == s);
  CHECK_THROWS_AS(parse_json_line("{\"A\":1}"), DomainError);
  CHECK_THROWS_AS(parse_csv_line("a,b"), DomainError);
}
