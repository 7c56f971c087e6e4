#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kCli = EULERCAT_CLI;
const std::string kCorpus = EULERCAT_CORPUS_DIR;

struct Run {
  int code = -1;
  std::string out;
  json parsed() const { return json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& name) { return kCorpus + "/" + name; }

fs::path scratch(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "eulercat_test_cli";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("chi") {
  Run r = run("chi " + corpus("c1.json"));
  CHECK(r.code == 0);
  CHECK(r.parsed()["chi"] == "5/13");
  CHECK(r.parsed()["lein_defined"] == false);

  r = run("chi " + corpus("terminal.json"));
  CHECK(r.parsed()["chi"] == "1");

  r = run("chi " + corpus("poset_pbc.json"));
  CHECK(r.parsed()["chi"] == "1");
  CHECK(r.parsed()["lein_defined"] == true);

  r = run("chi " + corpus("ex2_matrix.json"));
  CHECK(r.code == 0);
  CHECK(r.parsed()["chi"] == "7/17");
}

TEST_CASE("pinv") {
  Run r = run("pinv " + corpus("ex1_matrix.json"));
  CHECK(r.code == 0);
  CHECK(r.parsed()["entries"] == json::parse(R"([["3/26","3/26"],["1/13","1/13"]])"));

  r = run("pinv " + corpus("identity2_matrix.json"));
  CHECK(r.parsed()["entries"] == json::parse("[[1,0],[0,1]]"));

  r = run("pinv " + corpus("ex2_matrix.json"));
  CHECK(r.parsed()["entries"] ==
        json::parse(R"([["1/17","1/17","1/17"],["2/51","2/51","2/51"],["2/51","2/51","2/51"]])"));

  const fs::path wide = scratch("wide.json", R"({"rows":1,"cols":2,"entries":[[1,2]]})");
  CHECK(run("pinv " + wide.string()).code == 1);
}

TEST_CASE("weighting and coweighting") {
  Run r = run("weighting " + corpus("ex1_matrix.json"));
  CHECK(r.parsed()["weighting"] == json::parse(R"(["3/13","2/13"])"));
  r = run("coweighting " + corpus("ex1_matrix.json"));
  CHECK(r.code == 0);
  CHECK(r.parsed()["coweighting"].is_null());
  r = run("coweighting " + corpus("poset_pbc.json"));
  CHECK(r.parsed()["coweighting"] == json::parse("[1,0,0]"));
}

TEST_CASE("groth") {
  Run r = run("groth " + corpus("ex3_diagram.json"));
  CHECK(r.code == 0);
  const json j = r.parsed();
  CHECK(j["actual"] == "7/17");
  CHECK(j["predicted"] == "5/13");
  CHECK(j["applies"] == false);
  CHECK(j["adjacency"]["entries"] == json::parse("[[3,2,2],[3,2,2],[3,2,2]]"));

  r = run("groth " + corpus("poset_terminal_diagram.json"));
  CHECK(r.parsed()["actual"] == r.parsed()["predicted"]);

  r = run("groth " + corpus("poset_mixed_diagram.json"));
  CHECK(r.parsed()["actual"] == "3/2");
  CHECK(r.parsed()["predicted"] == "3/2");
  CHECK(r.parsed()["applies"] == true);
}

TEST_CASE("product and coproduct write category files") {
  Run r = run("product " + corpus("c1.json") + " " + corpus("c1.json"));
  CHECK(r.code == 0);
  const fs::path prod = scratch("c1xc1.json", r.out);
  CHECK(run("chi " + prod.string()).parsed()["chi"] == "25/169");

  r = run("coproduct " + corpus("c1.json") + " " + corpus("c2.json"));
  CHECK(r.code == 0);
  const fs::path sum = scratch("c1_c2.json", r.out);
  CHECK(run("chi " + sum.string()).parsed()["chi"] == "176/221");
}

TEST_CASE("check") {
  Run r = run("check " + corpus("c2.json"));
  CHECK(r.code == 0);
  CHECK(r.parsed()["valid"] == true);
  CHECK(run("check " + corpus("ex3_diagram.json")).code == 0);
  CHECK(run("check " + corpus("section_c1_c2.json")).code == 0);

  const fs::path bad = scratch("bad.json", R"({"objects":["x"],
    "morphisms":[{"id":"1","src":"x","dst":"x"},{"id":"g","src":"x","dst":"x"}],
    "identities":{"x":"1"},
    "composition":[["1","1","1"],["g","1","g"],["1","g","g"]]})");
  r = run("check " + bad.string());
  CHECK(r.code == 2);
  CHECK(r.parsed()["violations"][0]["message"] == "composition not total at (g,g)");
  CHECK(run("chi " + bad.string()).code == 2);
}

TEST_CASE("adjoint") {
  Run r = run("adjoint " + corpus("section_c1_c2.json") + " " + corpus("projection_c2_c1.json"));
  CHECK(r.code == 0);
  CHECK(r.parsed()["adjunction_matrices"] == true);
  CHECK(r.parsed()["transport"].is_null());
  CHECK(r.parsed()["transport_error"] == "[A] has no coweighting");

  r = run("adjoint " + corpus("initial_point.json") + " " + corpus("poset_to_point.json"));
  CHECK(r.parsed()["adjunction_matrices"] == true);
  CHECK(r.parsed()["transport"] == true);
}

TEST_CASE("verify-laws") {
  const std::string args = "verify-laws --seed 1 --count 50 --max-objects 4";
  const Run a = run(args);
  CHECK(a.code == 0);
  CHECK(a.parsed()["ok"] == true);
  CHECK(run(args + " --threads 3").out == a.out);

  const Run broken = run("verify-laws --seed 1 --count 1 --max-objects 4 --mutate-pinv");
  CHECK(broken.code == 3);
  CHECK(broken.parsed()["laws"][0]["law"] == "penrose");
  CHECK(broken.parsed()["laws"][0]["first_failure"].contains("matrix"));

  CHECK(run("verify-laws --seed 1 --count 0 --max-objects 4").code == 1);
  CHECK(run("verify-laws --seed 1 --count 5 --max-objects 0").code == 1);
  CHECK(run("verify-laws --seed 1 --max-objects 4").code == 1);
}

TEST_CASE("corpus") {
  const Run r = run("corpus " + corpus("manifest.json"));
  CHECK(r.code == 0);
  CHECK(r.parsed()["ok"] == true);
}

TEST_CASE("input errors exit 1") {
  CHECK(run("chi /nonexistent/file.json").code == 1);
  CHECK(run("chi " + scratch("garbage.json", "[1, 2").string()).code == 1);
  CHECK(run("chi " + scratch("array.json", "[1, 2]").string()).code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("").code == 1);
}

TEST_CASE("pretty output") {
  Run r = run("--pretty pinv " + corpus("ex1_matrix.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "[ 3/26  3/26 ]\n[ 1/13  1/13 ]\n");
  r = run("groth " + corpus("ex3_diagram.json") + " --pretty");
  CHECK(r.out.find("predicted  5/13") != std::string::npos);
  CHECK(r.out.find("applies    false") != std::string::npos);
  r = run("chi " + corpus("c1.json") + " --pretty");
  CHECK(r.out.find("chi           5/13") != std::string::npos);
}
