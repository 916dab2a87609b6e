#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ncgb/cli.hpp"
#include "support/fixtures.hpp"

using namespace ncgb;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// A presentation file that lives for the duration of one test.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents, const char* name) {
    path = std::string("cli_test_") + name + ".tmp";
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kS2File =
    "alphabet: a b c\n"
    "label: symmetric 2x2\n"
    "relations:\n"
    "a^2 - a\n"
    "ba + ab\n"
    "b^2 - b\n"
    "ca + ac - c\n"
    "cb + bc - c\n"
    "c^2 - b - a\n";

}  // namespace

TEST_CASE("groebner subcommand completes the sample file") {
  TempFile file(kS2File, "s2");
  RunResult r = run({"groebner", file.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: Complete") != std::string::npos);
  CHECK(r.out.find("basis (8):") != std::string::npos);
  CHECK(r.out.find("c^2 - b - a") != std::string::npos);
}

TEST_CASE("nf subcommand") {
  TempFile file(kS2File, "nf");
  RunResult completed = run({"nf", file.path, "--poly", "c^2*b"});
  CHECK(completed.code == 0);
  CHECK(completed.out == "b\n");

  RunResult raw = run({"nf", file.path, "--poly", "c^2*b", "--raw"});
  CHECK(raw.code == 0);
  CHECK(raw.out == "-ab + b\n");
}

TEST_CASE("nf trace export") {
  TempFile file(kS2File, "nftrace");
  RunResult r = run({"nf", file.path, "--poly", "c^2*b", "--raw", "--trace", "-"});
  CHECK(r.code == 0);
  auto json_start = r.out.find('{');
  REQUIRE(json_start != std::string::npos);
  auto trace = nlohmann::json::parse(r.out.substr(json_start));
  CHECK(trace["input"] == "c^2b");
  CHECK(trace["output"] == "-ab + b");
  CHECK(trace["steps"].size() == 5);
}

TEST_CASE("nonterminating input exits with the bound code") {
  TempFile file("alphabet: a b\nrelations:\naba - ba\n", "aba");
  RunResult r = run({"groebner", file.path, "--snapshots"});
  CHECK(r.code == 2);
  CHECK(r.out.find("status: TruncatedAtDegree (degree 20)") != std::string::npos);
}

TEST_CASE("dims subcommand with a preset") {
  RunResult r = run({"dims", "--preset", "a(1,2)", "--op", "alternating-sum", "--to", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "1, 4, 16, 60, 225, 840\n");

  TempFile csv("", "dimscsv");
  RunResult r2 = run({"dims", "--preset", "s2", "--to", "3", "--csv", csv.path});
  CHECK(r2.code == 0);
  std::ifstream in(csv.path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "degree,dim\n0,1\n1,3\n2,1\n3,0\n");
}

TEST_CASE("envelope subcommand summarizes the quotient") {
  RunResult r = run({"envelope", "--preset", "s2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("label: s2 / jordan-product") != std::string::npos);
  CHECK(r.out.find("quotient: finite, dimension 5") != std::string::npos);

  RunResult inf = run({"envelope", "--preset", "a(1,2)", "--op", "lie-inf"});
  CHECK(inf.code == 0);
  CHECK(inf.out.find("quotient: infinite; dims 0..10: 1, 4, 14, 36, 85, 176") !=
        std::string::npos);
}

TEST_CASE("multable subcommand") {
  TempFile file(kS2File, "mt");
  RunResult r = run({"multable", file.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("basis words: 1=1 2=a 3=b 4=c 5=ac") != std::string::npos);

  RunResult inf = run({"multable", "--preset", "a(1,2)", "--op", "alternating-sum"});
  CHECK(inf.code == 3);
  CHECK(inf.err.find("infinite") != std::string::npos);
}

TEST_CASE("usage errors exit with code one") {
  CHECK(run({"groebner", "missing_file.pres"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"dims", "--preset", "s2"}).code == 1);  // missing --to
  CHECK(run({"envelope", "--preset", "s2", "--op", "no-such-op"}).code == 1);
  CHECK(run({"envelope"}).code == 1);
  TempFile bad("alphabet: a\nrelations:\nq + 1\n", "bad");
  CHECK(run({"groebner", bad.path}).code == 1);
}

TEST_CASE("json reports are deterministic apart from timings") {
  TempFile file(kS2File, "json");
  auto get_json = [&] {
    RunResult r = run({"groebner", file.path, "--json", "-"});
    REQUIRE(r.code == 0);
    auto start = r.out.find('{');
    auto j = nlohmann::json::parse(r.out.substr(start));
    j.erase("timings");
    return j;
  };
  auto a = get_json();
  auto b = get_json();
  CHECK(a.dump() == b.dump());
  CHECK(a["schema"] == 1);
  CHECK(a["completion"]["status"] == "Complete");
  CHECK(a["completion"]["basis"].size() == 8);
  CHECK(a["config"]["max_degree"] == 20);
  CHECK(a["config"]["max_iterations"] == 50);
}

TEST_CASE("explicit bounds replace the defaults") {
  TempFile file("alphabet: a b\nrelations:\naba - ba\n", "bounds");
  RunResult r = run({"groebner", file.path, "--max-iter", "2", "--json", "-"});
  CHECK(r.code == 2);
  auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  CHECK(j["completion"]["status"] == "IterationLimit");
  CHECK(j["config"]["max_degree"].is_null());
  CHECK(j["config"]["max_iterations"] == 2);
}

TEST_CASE("structure constants file input") {
  TempFile sc(
      "dim 2\n"
      "arity 2\n"
      "1 1 -> 2*x_1\n", "scfile");
  RunResult r = run({"envelope", "--sc", sc.path, "--op", "jordan-product"});
  CHECK(r.code == 0);
  CHECK(r.out.find("quotient: finite, dimension ") != std::string::npos);
  CHECK(run({"envelope", "--sc", sc.path}).code == 1);  // missing --op
}
