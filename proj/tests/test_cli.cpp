#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "commands.hpp"
#include "dgfree/errors.hpp"
#include "json_io.hpp"
#include "support/oracle.hpp"

using namespace dgfree;
using namespace dgfree::cli;

namespace {

const fs::path kData = DGFREE_TEST_DATA_DIR;
fs::path tuple(const char* name) { return kData / "tuples" / name; }

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "dgfree_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

}  // namespace

TEST_CASE("check") {
  auto r = cmd_check(tuple("B6.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.payload["crisscross"] == true);
  r = cmd_check(tuple("not_crisscross.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.payload["crisscross"] == false);
  CHECK(r.payload["residuals"]["2.2"] == "1");
  CHECK(r.payload.contains("nonzero_blocks"));

  auto trunc = scratch("trunc.json");
  write_text(trunc, R"({"n": 2, "matrices": [[["0","0"],["0)");
  CHECK(cmd_check(trunc).exit_code == 2);
  CHECK(cmd_check(scratch("missing.json")).exit_code == 2);
  write_text(trunc, R"({"n": 2, "matrices": [[["0","0"]]]})");
  CHECK(cmd_check(trunc).exit_code == 2);
  write_text(trunc, R"({"n": 2, "matrices": [[["0.5","0"],["0","0"]],[["0","0"],["0","0"]]]})");
  CHECK(cmd_check(trunc).exit_code == 2);
}

TEST_CASE("classify") {
  auto r = cmd_classify(tuple("B7.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.payload["label"] == "B7");
  r = cmd_classify(tuple("B0.json"));
  CHECK(r.payload["label"] == "B0");
  r = cmd_classify(tuple("zero_n3.json"));
  CHECK(r.exit_code == 2);
  CHECK(r.payload["error"] == "classification implemented for n=2 only");
  r = cmd_classify(tuple("Bst_1_2.json"));
  CHECK(r.payload["label"] == "B(1,2)");
  CHECK(r.payload["s"] == "1");
  CHECK(r.payload["t"] == "2");
  CHECK(cmd_classify(tuple("not_crisscross.json")).exit_code == 2);
}

TEST_CASE("cohomology") {
  auto r = cmd_cohomology(tuple("B5.json"), 4, "tsv");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "degree\tdim_component\trank_d\tdim_ker\tdim_H\n0\t1\t0\t1\t1\n1\t2\t1\t1\t1\n2\t4\t2\t2\t1\n"
        "3\t8\t5\t3\t1\n4\t16\t10\t6\t1\n");
  r = cmd_cohomology(tuple("B1.json"), 4, "json");
  CHECK(r.payload["dims"] == nlohmann::json::array({1, 0, 0, 0, 0}));
  CHECK(cmd_cohomology(tuple("B1.json"), -1, "json").exit_code == 2);
  CHECK(cmd_cohomology(tuple("B1.json"), 2, "xml").exit_code == 2);
  CHECK(cmd_cohomology(tuple("not_crisscross.json"), 2, "json").exit_code == 2);
}

TEST_CASE("iso") {
  auto r = cmd_iso(tuple("B1.json"), tuple("B2.json"), std::nullopt);
  CHECK(r.exit_code == 1);
  CHECK(r.payload["reason"] == "stacked_rank 1 vs 2");
  r = cmd_iso(tuple("B8.json"), tuple("Bst_2_half.json"), kData / "witnesses" / "b8_to_bst_2_half.json");
  CHECK(r.exit_code == 0);
  CHECK(r.payload["supplied_witness_valid"] == true);
  r = cmd_iso(tuple("B6.json"), tuple("B6.json"), std::nullopt);
  CHECK(r.exit_code == 0);
  CHECK(r.payload["witness"]["entries"] == nlohmann::json::parse(R"([["1","0"],["0","1"]])"));
  CHECK(cmd_iso(tuple("B6.json"), tuple("zero_n3.json"), std::nullopt).exit_code == 2);
  auto w = scratch("singular.json");
  write_text(w, R"({"n": 2, "entries": [["1","2"],["2","4"]]})");
  CHECK(cmd_iso(tuple("B8.json"), tuple("B8.json"), w).exit_code == 2);
}

TEST_CASE("module") {
  auto b6 = kData / "modules" / "b6_resolution.json";
  auto r = cmd_module(b6, "validate", false, 4);
  CHECK(r.exit_code == 0);
  CHECK(r.payload["valid"] == true);
  r = cmd_module(b6, "cohomology", false, 6);
  CHECK(r.payload["dims"] == nlohmann::json::array({1, 0, 0, 0, 0, 0, 0}));
  r = cmd_module(kData / "modules" / "trivial_n3.json", "cohomology", true, 0);
  CHECK(r.payload["dims"] == nlohmann::json::array({3}));
  r = cmd_module(b6, "endo", false, 0);
  CHECK(r.payload["dimension"] == 3);
  CHECK(r.payload["generator_nilpotency"] == 3);
  r = cmd_module(kData / "modules" / "bad_d2.json", "validate", false, 0);
  CHECK(r.exit_code == 1);
  CHECK(r.payload["valid"] == false);
  CHECK(cmd_module(kData / "modules" / "bad_d2.json", "endo", false, 0).exit_code == 2);
  CHECK(cmd_module(b6, "frobnicate", false, 0).exit_code == 2);

  // algebra given as a path next to the module file
  auto dir = scratch("mod");
  fs::create_directories(dir);
  fs::copy_file(tuple("B6.json"), dir / "alg.json", fs::copy_options::overwrite_existing);
  write_text(dir / "m.json", R"({"algebra": "alg.json", "basis": [["1",0],["se_x2",0],["se_z",0]],
                                 "diff": [["0","0","0"],["x2","0","0"],["x1","x2","0"]]})");
  CHECK(cmd_module(dir / "m.json", "validate", false, 0).exit_code == 0);
}

TEST_CASE("families") {
  FamilyQuery q;
  auto r = cmd_families(q);
  CHECK(r.payload["families"].size() == 27);
  q.case_id = "14.3";
  q.lambda = "2";
  q.mu = "3";
  r = cmd_families(q);
  CHECK(r.exit_code == 0);
  CHECK(r.payload["instance"]["tuple"] ==
        nlohmann::json::parse(R"({"n":2,"matrices":[[["0","3"],["3","2"]],[["0","0"],["0","3"]]]})"));
  q.mu = "0";
  CHECK(cmd_families(q).exit_code == 2);
  FamilyQuery grid;
  grid.case_id = "2";
  grid.grid = true;
  CHECK(cmd_families(grid).payload["instances"].size() == 4);
  FamilyQuery lab;
  lab.label = "B(2,3)";
  CHECK(cmd_families(lab).payload["tuple"] ==
        nlohmann::json::parse(R"({"n":2,"matrices":[[["-3","1"],["1","1/2"]],[["2","1"],["1","3"]]]})"));
  lab.label = "nope";
  CHECK(cmd_families(lab).exit_code == 2);
}

TEST_CASE("verify-paper") {
  suite::Options opt;
  opt.data_dir = kData;
  opt.only = {"cohomology"};
  auto r = cmd_verify_paper(opt);
  CHECK(r.exit_code == 0);
  REQUIRE(r.payload["criteria"].size() == 1);
  CHECK(r.payload["criteria"][0]["group"] == "cohomology");

  // a corrupted golden file fails the criterion that reads it, by name
  auto copy = scratch("golden_copy");
  fs::remove_all(copy);
  fs::copy(kData, copy, fs::copy_options::recursive);
  write_text(copy / "golden" / "cohomology.json", "{\"max_degree\": 8, \"expected\": ");
  opt.data_dir = copy;
  opt.only = {"cohomology", "ring"};
  r = cmd_verify_paper(opt);
  CHECK(r.exit_code == 1);
  CHECK(r.payload["failed"] == nlohmann::json::array({"cohomology"}));
  CHECK(r.text.find("FAIL  4 cohomology") != std::string::npos);

  // wrong value rather than broken syntax
  auto g = io::read_json_file(kData / "golden" / "sweep.json");
  g["crisscross_count"] = 104;
  io::write_json_file(copy / "golden" / "sweep.json", g);
  opt.only = {"sweep"};
  r = cmd_verify_paper(opt);
  CHECK(r.exit_code == 1);
  CHECK(r.payload["failed"] == nlohmann::json::array({"sweep"}));

  opt.only = {"nope"};
  CHECK(cmd_verify_paper(opt).exit_code == 2);
}

TEST_CASE("property: JSON round trips") {
  oracle::Gen g(81);
  for (int iter = 0; iter < 100; ++iter) {
    int n = static_cast<int>(g.integer(1, 4));
    auto t = g.any_tuple(n, 5);
    auto text = io::tuple_json(t).dump();
    CHECK(io::tuple_from(nlohmann::json::parse(text)) == t);
    WitnessMatrix w(g.invertible(n, 5));
    CHECK(io::witness_from(nlohmann::json::parse(io::witness_json(w).dump())) == w);
    auto e = g.element(n, static_cast<int>(g.integer(0, 3)));
    CHECK(Element::parse(n, e.str()) == e);
  }
  for (const char* s : {"3", "-1/2", "5 + 2*sqrt(3)", "-sqrt(2)", "1/3 - 4/5*sqrt(7)"}) {
    auto v = io::parse_surd(s);
    CHECK(io::parse_surd(v.str()) == v);
  }
  CHECK(io::rational_from(nlohmann::json(7)) == Rational(7));
  CHECK_THROWS_AS(io::rational_from(nlohmann::json(0.5)), ParseError);
}

TEST_CASE("max degree default") {
  ::setenv("DGFREE_MAX_DEGREE", "3", 1);
  CHECK(default_max_degree() == 3);
  ::setenv("DGFREE_MAX_DEGREE", "junk", 1);
  CHECK(default_max_degree() == 8);
  ::unsetenv("DGFREE_MAX_DEGREE");
  CHECK(default_max_degree() == 8);
}
