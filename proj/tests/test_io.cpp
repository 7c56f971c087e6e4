#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "eulercat/corpus.hpp"
#include "eulercat/errors.hpp"
#include "eulercat/io.hpp"
#include "eulercat/weights.hpp"

using namespace eulercat;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kCorpus = EULERCAT_CORPUS_DIR;

fs::path scratch(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "eulercat_test_io";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("rationals in JSON") {
  CHECK(io::to_json(make_rational(3, 1)) == json(3));
  CHECK(io::to_json(make_rational(-5, 13)) == json("-5/13"));
  CHECK(io::rational_from_json(json(7)) == 7);
  CHECK(io::rational_from_json(json("6/4")) == make_rational(3, 2));
  CHECK(io::rational_from_json(json("12")) == 12);
  CHECK_THROWS_AS(io::rational_from_json(json(1.5)), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(json("x")), ParseError);

  const Rational big = parse_rational("123456789012345678901234567890");
  CHECK(io::to_json(big) == json("123456789012345678901234567890"));
  CHECK(io::rational_from_json(io::to_json(big)) == big);
}

TEST_CASE("matrix JSON round trip") {
  const RatMatrix m = RatMatrix::from_rows({{make_rational(3, 26), 1}, {0, make_rational(-1, 13)}});
  const json j = io::to_json(m);
  CHECK(j == json::parse(R"({"rows":2,"cols":2,"entries":[["3/26",1],[0,"-1/13"]]})"));
  CHECK(io::matrix_from_json(j) == m);

  CHECK(io::matrix_from_json(json::parse(R"({"rows":0,"cols":0,"entries":[]})")) == RatMatrix(0, 0));
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":2,"cols":2,"entries":[[1,2]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[[1]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"cols":1,"entries":[[1]]})")), ParseError);
}

TEST_CASE("category JSON round trip") {
  io::Loader loader;
  const FinCategory& c1 = *loader.category(kCorpus + "/c1.json");
  REQUIRE(c1.valid());
  const FinCategory again(io::category_from_json(io::to_json(c1.data())));
  CHECK(again == c1);
  CHECK_THROWS_AS(io::category_from_json(json::parse(R"({"objects":["x"]})")), ParseError);
  CHECK_THROWS_AS(io::category_from_json(json::parse(
                      R"({"objects":["x"],"morphisms":[],"identities":{},"composition":[["a","b"]]})")),
                  ParseError);
}

TEST_CASE("chi report and validation report JSON") {
  io::Loader loader;
  const json r = io::to_json(chi_report(*loader.category(kCorpus + "/c1.json")));
  CHECK(r["chi"] == "5/13");
  CHECK(r["has_weighting"] == true);
  CHECK(r["has_coweighting"] == false);
  CHECK(r["lein_defined"] == false);
  CHECK(r["weighting"] == json::parse(R"(["3/13","2/13"])"));
  CHECK(r["coweighting"].is_null());

  const FinCategory bad(CategoryData{{"x"}, {}, {}, {}});
  const json v = io::to_json(bad.report());
  CHECK(v["valid"] == false);
  CHECK(v["violations"][0]["axiom"] == "identities");
}

TEST_CASE("loader errors name the file") {
  io::Loader loader;
  CHECK_THROWS_WITH_AS(loader.category("/nonexistent/eulercat.json"),
                       doctest::Contains("/nonexistent/eulercat.json"), ParseError);
  const fs::path broken = scratch("broken.json", "{ not json");
  CHECK_THROWS_WITH_AS(loader.category(broken), doctest::Contains("broken.json"), ParseError);
  const fs::path ragged = scratch("ragged.json", R"({"rows":2,"cols":2,"entries":[[1,2],[3]]})");
  CHECK_THROWS_AS(loader.matrix(ragged), ParseError);
}

TEST_CASE("loader shares categories between files") {
  io::Loader loader;
  const FunctorData s = loader.functor(kCorpus + "/section_c1_c2.json");
  const FunctorData p = loader.functor(kCorpus + "/projection_c2_c1.json");
  CHECK(s.source() == p.target());
  CHECK(s.target() == p.source());
  CHECK(validate(s).ok());
  CHECK(validate(p).ok());
}

TEST_CASE("diagram files") {
  io::Loader loader;
  const Diagram d = loader.diagram(kCorpus + "/ex3_diagram.json");
  CHECK(d.index()->object_count() == 2);
  CHECK(d.fiber(1).object_count() == 2);
  CHECK(validate(d).ok());

  const fs::path dir = fs::temp_directory_path() / "eulercat_test_io";
  fs::create_directories(dir);
  fs::copy_file(kCorpus + "/poset_pbc.json", dir / "poset_pbc.json",
                fs::copy_options::overwrite_existing);
  fs::copy_file(kCorpus + "/terminal.json", dir / "terminal.json",
                fs::copy_options::overwrite_existing);
  const fs::path missing = scratch("missing_arrow.json", R"({
    "index": "poset_pbc.json",
    "fibers": {"a": "terminal.json", "b": "terminal.json", "c": "terminal.json"},
    "arrows": {"ab": {"objects": {"*": "*"}, "morphisms": {"id": "id"}}}
  })");
  CHECK_THROWS_WITH_AS(loader.diagram(missing), doctest::Contains("ac"), ParseError);
  const fs::path unknown = scratch("unknown_fiber.json", R"({
    "index": "poset_pbc.json",
    "fibers": {"z": "terminal.json"},
    "arrows": {}
  })");
  CHECK_THROWS_AS(loader.diagram(unknown), ParseError);
}

TEST_CASE("pretty printing aligns columns") {
  const RatMatrix m = RatMatrix::from_rows({{make_rational(3, 26), 1}, {0, -10}});
  CHECK(io::pretty(m) == "[ 3/26    1 ]\n[    0  -10 ]\n");
}

TEST_CASE("the bundled corpus reproduces every expected value") {
  const auto entries = load_manifest(kCorpus + "/manifest.json");
  CHECK(entries.size() >= 15);
  const auto checks = run_corpus(kCorpus + "/manifest.json");
  CHECK(checks.size() > 50);
  for (const auto& c : checks) {
    INFO(c.entry, " ", c.check, " expected ", c.expected.dump(), " got ", c.actual.dump());
    CHECK(c.ok);
  }
}

TEST_CASE("corpus checks fail on wrong expectations") {
  const fs::path dir = fs::temp_directory_path() / "eulercat_test_io";
  fs::create_directories(dir);
  fs::copy_file(kCorpus + "/ex1_matrix.json", dir / "ex1_matrix.json",
                fs::copy_options::overwrite_existing);
  const fs::path manifest = scratch("manifest.json", R"({"entries": [
    {"name": "ex1", "kind": "matrix", "path": "ex1_matrix.json",
     "expected": {"chi": "5/14", "rank": 1, "no_such_check": 0}}
  ]})");
  const auto checks = run_corpus(manifest);
  REQUIRE(checks.size() == 3);
  for (const auto& c : checks) CHECK(c.ok == (c.check == "rank"));

  const fs::path bad_kind = scratch("bad_kind.json",
                                    R"({"entries": [{"name": "x", "kind": "tensor", "path": "x"}]})");
  CHECK_THROWS_AS(load_manifest(bad_kind), ParseError);
}
