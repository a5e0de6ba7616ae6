#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcat/cli.hpp"

using namespace qcat;
using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err, /*stdout_is_tty=*/false);
  return CliResult{code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("qcat_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("catalan listing in all three formats") {
  CHECK(run({"catalan", "--upto", "6"}).out ==
        "[\"1\",\"1\",\"2\",\"5\",\"14\",\"42\",\"132\"]\n");
  CHECK(run({"--format", "text", "catalan", "--upto", "6"}).out == "1,1,2,5,14,42,132\n");
  CHECK(run({"--format", "csv", "catalan", "--upto", "2"}).out == "n,value\n0,1\n1,1\n2,2\n");
}

TEST_CASE("triangle and trapezoid tables") {
  const CliResult tri = run({"triangle", "--rows", "3"});
  CHECK(tri.code == 0);
  CHECK(json::parse(tri.out) ==
        json::parse(R"([["1"],["1","1"],["1","2","2"],["1","3","5","5"]])"));

  const CliResult trap = run({"--format", "text", "trapezoid", "--order", "2", "--rows", "2"});
  CHECK(trap.out == "1 1\n1 2 2\n1 3 5 5\n");
}

TEST_CASE("partition enumeration output") {
  const CliResult all = run({"partitions", "enumerate", "--n", "2"});
  CHECK(json::parse(all.out) == json::parse("[[[1,2],[3,4]],[[1,3],[2,4]],[[1,4],[2,3]]]"));

  const CliResult nc = run({"partitions", "enumerate", "--n", "3", "--noncrossing"});
  CHECK(json::parse(nc.out).size() == 5);

  const CliResult fiber = run({"partitions", "enumerate", "--epsilon", "--++"});
  CHECK(json::parse(fiber.out) == json::parse("[[[1,3],[2,4]],[[1,4],[2,3]]]"));

  const CliResult counterpart =
      run({"partitions", "enumerate", "--epsilon", "--++", "--noncrossing"});
  CHECK(json::parse(counterpart.out) == json::parse("[[[1,4],[2,3]]]"));

  const CliResult stratum = run({"partitions", "enumerate", "--n", "3", "--k", "3"});
  CHECK(json::parse(stratum.out).size() == 6);

  CHECK(run({"partitions", "enumerate", "--n", "3", "--epsilon", "--++"}).code == 2);
  CHECK(run({"partitions", "enumerate", "--n", "99"}).code == 3);
  CHECK(run({"partitions", "enumerate"}).code == 2);
}

TEST_CASE("strata table") {
  const CliResult res = run({"partitions", "strata", "--n", "3"});
  CHECK(json::parse(res.out) ==
        json::parse(R"([{"k":1,"ncpp":"2","pp":"3"},{"k":2,"ncpp":"2","pp":"6"},{"k":3,"ncpp":"1","pp":"6"}])"));
}

TEST_CASE("cts solve from a boundary file") {
  TempFile boundary(R"(["1","1","2","5"])");
  const CliResult closed = run({"cts", "solve", "--boundary", boundary.str()});
  CHECK(closed.code == 0);
  const json parsed = json::parse(closed.out);
  CHECK(parsed["method"] == "closed");
  CHECK(parsed["rows"] == json::parse(R"([["1"],["1","1"],["2","2","1"],["5","5","3","1"]])"));

  const CliResult both =
      run({"cts", "solve", "--boundary", boundary.str(), "--method", "both"});
  CHECK(both.code == 0);
  CHECK(json::parse(both.out)["rows"] == parsed["rows"]);

  TempFile poly_boundary(R"([{"coeffs":["1","1"]},{"coeffs":["2","3","1"]}])");
  const CliResult poly = run({"cts", "solve", "--boundary", poly_boundary.str()});
  CHECK(json::parse(poly.out)["rows"][1][1] == json::parse(R"({"coeffs":["1","1"]})"));

  TempFile mixed(R"(["3", {"coeffs":["0","1"]}])");
  const CliResult promoted = run({"cts", "solve", "--boundary", mixed.str()});
  CHECK(json::parse(promoted.out)["rows"][0][0] == json::parse(R"({"coeffs":["3"]})"));

  CHECK(run({"cts", "solve", "--boundary", "/nonexistent.json"}).code == 2);
  TempFile bad("not json");
  CHECK(run({"cts", "solve", "--boundary", bad.str()}).code == 2);
  TempFile empty("[]");
  CHECK(run({"cts", "solve", "--boundary", empty.str()}).code == 2);
}

TEST_CASE("fock moment queries") {
  CHECK(run({"fock", "moment", "--word", "--++"}).out == "{\"coeffs\":[\"1\",\"1\"]}\n");
  CHECK(run({"fock", "moment", "--word", "--++", "--q", "1"}).out == "\"2\"\n");
  CHECK(run({"fock", "moment", "--word", "+-"}).out == "{\"coeffs\":[]}\n");

  TempFile gram(R"([["1","1/2"],["1/2","1"]])");
  const CliResult with_gram = run({"fock", "moment", "--word", "-+", "--gram", gram.str()});
  CHECK(with_gram.out == "{\"coeffs\":[\"1/2\"]}\n");

  // labelled letters reuse vectors: -1+1 pairs the same abstract vector
  const CliResult labelled =
      run({"fock", "moment", "--word", "-1+1", "--gram", gram.str()});
  CHECK(labelled.out == "{\"coeffs\":[\"1\"]}\n");

  CHECK(run({"fock", "moment", "--word", "-x"}).code == 2);
  CHECK(run({"fock", "moment", "--word", "-+", "--q", "bad"}).code == 2);
}

TEST_CASE("fock pnk and pn listings") {
  CHECK(run({"fock", "pnk", "--n", "2"}).out == "{\"(2,1)\":\"1\",\"(2,2)\":\"1+q\"}\n");
  CHECK(run({"fock", "pn", "--upto", "3"}).out == "[\"1\",\"2+q\",\"5+5q+q^2\"]\n");
  CHECK(run({"--format", "text", "fock", "pn", "--upto", "2"}).out == "P(1)=1\nP(2)=2+q\n");
  CHECK(run({"fock", "pnk", "--n", "9"}).code == 3);
}

TEST_CASE("verify command") {
  const CliResult res = run({"verify", "--suite", "trapezoid", "--max-n", "4"});
  CHECK(res.code == 0);
  CHECK(json::parse(res.out)["passed"] == true);

  const CliResult text = run({"--format", "text", "verify", "--suite", "cts", "--max-n", "4"});
  CHECK(text.code == 0);
  CHECK(text.out.find("RESULT: PASS") != std::string::npos);

  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::vector<std::vector<std::string>> commands = {
      {"catalan", "--upto", "8"},
      {"partitions", "enumerate", "--n", "4"},
      {"fock", "pnk", "--n", "4"},
      {"verify", "--suite", "partitions", "--max-n", "4"},
  };
  for (const auto& argv : commands) {
    const CliResult first = run(argv);
    const CliResult second = run(argv);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"catalan"}).code == 2);               // missing --upto
  CHECK(run({"triangle", "--rows", "-1"}).code == 2);
  CHECK(run({"--format", "yaml", "catalan", "--upto", "1"}).code == 2);
}
