// End-to-end tests against the installed CLI binary (path injected by the
// build as CONVALG_CLI_PATH).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(CONVALG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const std::string kDeltaOne =
    R"('{"monoid":{"monoid":"nat","dim":1},"terms":[{"elem":[1],"re":1.0,"im":0.0}]}')";
const std::string kPolySquare =
    R"('{"monoid":{"monoid":"nat","dim":1},"terms":[{"elem":[0],"re":1,"im":0},{"elem":[1],"re":2,"im":0},{"elem":[2],"re":1,"im":0}]}')";
const std::string kOrthant2 = R"('{"generators":[[1,0],[0,1]]}')";

}  // namespace

TEST_CASE("conv: delta_1 * delta_1 = delta_2") {
  const RunResult r = run_cli("conv " + kDeltaOne + " " + kDeltaOne);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"monoid\":{\"monoid\":\"nat\",\"dim\":1},\"terms\":[{\"elem\":[2],\"re\":1,\"im\":0}]}\n");
}

TEST_CASE("conv output is byte-identical across runs") {
  const std::string args = "conv " + kDeltaOne + " " + kPolySquare;
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("eval: (1+x)^2 at z = 2 is 9") {
  const RunResult r = run_cli("eval --char z=2 " + kPolySquare);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"value\":{\"re\":9,\"im\":0}}\n");
}

TEST_CASE("eval accepts complex literals") {
  // (1+x)^2 at x = i is (1+i)^2 = 2i
  const RunResult r = run_cli("eval --char z=i " + kPolySquare);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"value\":{\"re\":0,\"im\":2}}\n");
}

TEST_CASE("eval on a summable document reports the tail as error bound") {
  const std::string summable =
      R"('{"monoid":{"monoid":"nat","dim":1},"terms":[{"elem":[0],"re":1,"im":0}],"tail_bound":0.25}')";
  const RunResult r = run_cli("eval --char z=0.5 " + summable);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"value\":{\"re\":1,\"im\":0},\"error_bound\":0.25}\n");
}

TEST_CASE("norm: finite part plus tail") {
  const std::string summable =
      R"('{"monoid":{"monoid":"nat","dim":1},"terms":[{"elem":[0],"re":3,"im":4}],"tail_bound":0.5}')";
  const RunResult r = run_cli("norm " + summable);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"lower\":5,\"upper\":5.5}\n");
}

TEST_CASE("total-conv: the formal inverse identity through the CLI") {
  const RunResult at0 = run_cli("total-conv ones poly:[1,-1] --at 0");
  CHECK(at0.exit_code == 0);
  CHECK(at0.out == "{\"at\":0,\"value\":{\"re\":1,\"im\":0}}\n");

  const RunResult at5 = run_cli("total-conv ones poly:[1,-1] --at 5");
  CHECK(at5.exit_code == 0);
  CHECK(at5.out == "{\"at\":5,\"value\":{\"re\":0,\"im\":0}}\n");

  const RunResult upto = run_cli("total-conv ones poly:[1,-1] --upto 8");
  CHECK(upto.exit_code == 0);
  CHECK(upto.out ==
        "{\"monoid\":{\"monoid\":\"nat\",\"dim\":1},\"terms\":[{\"elem\":[0],\"re\":1,\"im\":0}]}\n");
}

TEST_CASE("file-based inputs and character documents") {
  const std::string f_path = "/tmp/convalg_cli_f.json";
  const std::string chr_path = "/tmp/convalg_cli_chr.json";
  {
    std::ofstream f(f_path);
    f << R"({"monoid":{"monoid":"nat","dim":1},"terms":[{"elem":[1],"re":1.0,"im":0.0}]})";
    std::ofstream c(chr_path);
    c << R"({"char":{"monoid":{"monoid":"nat","dim":1},"base":[{"re":2.0,"im":0.0}]}})";
  }
  const RunResult conv = run_cli("conv " + f_path + " " + f_path);
  CHECK(conv.exit_code == 0);
  CHECK(conv.out ==
        "{\"monoid\":{\"monoid\":\"nat\",\"dim\":1},\"terms\":[{\"elem\":[2],\"re\":1,\"im\":0}]}\n");

  const RunResult eval = run_cli("eval --char " + chr_path + " " + f_path);
  CHECK(eval.exit_code == 0);
  CHECK(eval.out == "{\"value\":{\"re\":2,\"im\":0}}\n");

  std::remove(f_path.c_str());
  std::remove(chr_path.c_str());
}

TEST_CASE("geometric and delta rules through total-conv") {
  // (sum 0.5^j x^j) * x^0-shifted delta at 0: coefficient path 0.5^4 = 0.0625
  const RunResult r = run_cli("total-conv geometric:0.5 delta:0 --at 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"at\":4,\"value\":{\"re\":0.0625,\"im\":0}}\n");
}

TEST_CASE("cone queries") {
  CHECK(run_cli("cone-contains " + kOrthant2 + " --point 1,2").out == "{\"contains\":true}\n");
  CHECK(run_cli("cone-contains " + kOrthant2 + " --point -1,1").out == "{\"contains\":false}\n");
  CHECK(run_cli("dual-contains " + kOrthant2 + " --point 1,1").out == "{\"contains\":true}\n");
  CHECK(run_cli("dual-contains " + kOrthant2 + " --point 1,-1").out == "{\"contains\":false}\n");
}

TEST_CASE("laplace: a unit point mass pairs to 1") {
  const std::string grid =
      R"('{"dim":1,"extent":1.0,"spacing":0.5,"cone":{"generators":[[1]]},"values":[2,0,0,0,0,0]}')";
  const RunResult r = run_cli("laplace " + grid + " --zeta -1,0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"value\":{\"re\":1,\"im\":0}}\n");
}

TEST_CASE("cone-conv convolves grid documents") {
  const std::string grid =
      R"('{"dim":1,"extent":1.0,"spacing":0.5,"values":[2,0,0,0,0,0]}')";
  const RunResult r = run_cli("cone-conv " + grid + " " + grid);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"dim\":1,\"extent\":1,\"spacing\":0.5,\"values\":[2,0,0,0,0,0]}\n");
}

TEST_CASE("exit code 2: malformed input") {
  CHECK(run_cli("conv '{broken' '{broken'").exit_code == 2);
  CHECK(run_cli("conv /nonexistent.json /nonexistent.json").exit_code == 2);
  CHECK(run_cli("eval --char z=bogus " + kPolySquare).exit_code == 2);
  CHECK(run_cli("total-conv nonsense ones --at 1").exit_code == 2);
  CHECK(run_cli("conv " + kDeltaOne).exit_code == 2);  // missing positional
}

TEST_CASE("exit code 3: precondition violations") {
  const std::string int_delta =
      R"('{"monoid":{"monoid":"int","dim":1},"terms":[{"elem":[1],"re":1,"im":0}]}')";
  CHECK(run_cli("conv " + kDeltaOne + " " + int_delta).exit_code == 3);

  // unbounded character on a summable function
  const std::string summable =
      R"('{"monoid":{"monoid":"nat","dim":1},"terms":[{"elem":[0],"re":1,"im":0}],"tail_bound":0.1}')";
  CHECK(run_cli("eval --char z=1.5 " + summable).exit_code == 3);
}

TEST_CASE("exit code 4: integer overflow in combine") {
  const std::string huge =
      R"('{"monoid":{"monoid":"nat","dim":1},"terms":[{"elem":[4611686018427387904],"re":1,"im":0}]}')";
  CHECK(run_cli("conv " + huge + " " + huge).exit_code == 4);
}

TEST_CASE("--out writes the same canonical bytes to a file") {
  const std::string path = "/tmp/convalg_cli_out.json";
  std::remove(path.c_str());
  const RunResult direct = run_cli("conv " + kDeltaOne + " " + kDeltaOne);
  const RunResult filed = run_cli("conv " + kDeltaOne + " " + kDeltaOne + " --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contents == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("--help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("demo --help").exit_code == 0);
}

TEST_CASE("demos self-report success") {
  for (const std::string name : {"poly", "wiener", "inverse"}) {
    const RunResult r = run_cli("demo " + name);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
  }
  const RunResult laplace = run_cli("demo laplace --h 0.01 --extent 10");
  CHECK(laplace.exit_code == 0);
  CHECK(laplace.out.find("\"pass\":true") != std::string::npos);
}
