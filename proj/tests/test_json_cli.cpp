#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nilalg/families.hpp"
#include "nilalg/iso.hpp"
#include "nilalg/json_io.hpp"
#include "nilalg/rng.hpp"

using namespace nilalg;

#ifndef NILALG_CLI_PATH
#define NILALG_CLI_PATH "nilalg"
#endif
#ifndef NILALG_GOLDEN_DIR
#define NILALG_GOLDEN_DIR "tests/golden"
#endif

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const std::string& stdout_file = "/tmp/nilalg_cli_out.txt",
            const std::string& env_prefix = "") {
  std::string cmd = env_prefix + std::string(NILALG_CLI_PATH) + " " + args + " > " + stdout_file + " 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("table documents round trip") {
  std::vector<AlgebraTable> tables = {build(FamilyId::mu0(4)),
                                      build(FamilyId::pi(8, Rational(2))),
                                      build(FamilyId::mu_prime(6, 2, Rational(1),
                                                               {{Rational(-2), Rational(-1)},
                                                                {Rational(1), Rational(1, 2)}})),
                                      build(FamilyId::mu2(2, 6, Rational(5)), FieldSpec::prime_field(7)),
                                      AlgebraTable(3, Q)};
  for (const AlgebraTable& t : tables) {
    Json doc = table_to_json(t);
    AlgebraTable parsed = table_from_json(doc);
    CHECK(parsed == t);
    CHECK(parsed.labels() == t.labels());
    // canonical serialization is byte-stable under a parse/serialize cycle
    std::string text = dump_json(doc);
    CHECK(dump_json(table_to_json(table_from_json(Json::parse(text)))) == text);
  }
}

TEST_CASE("strict parsing rejects malformed documents") {
  Json good = table_to_json(build(FamilyId::mu0(3)));
  CHECK_NOTHROW(table_from_json(good));

  Json unknown = good;
  unknown["extra"] = 1;
  CHECK_THROWS_AS(table_from_json(unknown), Error);

  Json bad_version = good;
  bad_version["schema_version"] = 2;
  CHECK_THROWS_AS(table_from_json(bad_version), Error);

  Json bad_scalar = good;
  bad_scalar["products"][0]["out"][0][1] = "1/0";
  CHECK_THROWS_AS(table_from_json(bad_scalar), Error);

  Json numeric_scalar = good;
  numeric_scalar["products"][0]["out"][0][1] = 1;
  CHECK_THROWS_AS(table_from_json(numeric_scalar), Error);

  Json dup = good;
  dup["products"].push_back(dup["products"][0]);
  CHECK_THROWS_AS(table_from_json(dup), Error);

  Json out_of_range = good;
  out_of_range["products"][0]["i"] = 9;
  CHECK_THROWS_AS(table_from_json(out_of_range), Error);
}

TEST_CASE("matrix documents round trip") {
  Rng rng(9);
  Matrix m(3, 4, FieldSpec::prime_field(5));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = rng.scalar(m.field());
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("golden family transcriptions match the constructors") {
  struct G {
    std::string file;
    FamilyId id;
  };
  std::vector<G> goldens = {
      {"mu0_4", FamilyId::mu0(4)},
      {"mu0_split_5_3", FamilyId::mu0_split(5, 3)},
      {"heisenberg_split_1", FamilyId::heisenberg_split(1)},
      {"heisenberg_split_3", FamilyId::heisenberg_split(3)},
      {"lambda_1", FamilyId::lambda(1)},
      {"lambda_2", FamilyId::lambda(2)},
      {"pi_4", FamilyId::pi(4)},
      {"pi_8_2", FamilyId::pi(8, Rational(2))},
      {"mu2_1_7", FamilyId::mu2(1, 7)},
      {"mu2_2_6_2", FamilyId::mu2(2, 6, Rational(2))},
  };
  for (const G& g : goldens) {
    Json expected = load_json_file(std::string(NILALG_GOLDEN_DIR) + "/families/" + g.file + ".json");
    Json actual = table_to_json(build(g.id));
    CHECK(nlohmann::json::parse(actual.dump()) == nlohmann::json::parse(expected.dump()));
  }
}

TEST_CASE("cli build, check, profile, invariants, charseq, grade") {
  REQUIRE(run_cli("build --family mu0 --dim 4 --out /tmp/a.json") == 0);
  AlgebraTable a = table_from_json(load_json_file("/tmp/a.json"));
  CHECK(a == build(FamilyId::mu0(4)));

  REQUIRE(run_cli("check /tmp/a.json") == 0);
  CHECK(slurp("/tmp/nilalg_cli_out.txt") == "associative: true; nilindex: 5\n");

  REQUIRE(run_cli("profile /tmp/a.json --out /tmp/profile.json") == 0);
  Json prof = load_json_file("/tmp/profile.json");
  CHECK(prof["classification"] == "null-filiform");
  CHECK(prof["nilindex"] == 5);

  REQUIRE(run_cli("invariants /tmp/a.json --out /tmp/inv.json") == 0);
  Json inv = load_json_file("/tmp/inv.json");
  CHECK(inv["center_dims"] == Json::array({1, 1, 1}));

  REQUIRE(run_cli("build --family mu0 --dim 4 --field gf5 --out /tmp/a5.json") == 0);
  REQUIRE(run_cli("charseq /tmp/a5.json --out /tmp/cs.json") == 0);
  Json cs = load_json_file("/tmp/cs.json");
  CHECK(cs["parts"] == Json::array({4}));
  CHECK(cs["strategy"] == "exhaustive");

  // rational tables fall back to the sampled lower bound
  REQUIRE(run_cli("charseq /tmp/a.json --seed 3 --out /tmp/csq.json") == 0);
  Json csq = load_json_file("/tmp/csq.json");
  CHECK(csq["strategy"] == "sampled");
  CHECK(csq["certified"] == "lower-bound");
  CHECK(csq["parts"] == Json::array({4}));

  REQUIRE(run_cli("grade /tmp/a.json --out /tmp/grade.json") == 0);
  Json gr = load_json_file("/tmp/grade.json");
  CHECK(gr["component_dims"] == Json::array({1, 1, 1, 1}));
  CHECK(gr["naturally_graded"] == "yes");

  // a non-graded table is refuted by invariants even over Q
  REQUIRE(run_cli("build --family mu1 --k 2 --dim 6 --out /tmp/m126.json") == 0);
  REQUIRE(run_cli("grade /tmp/m126.json --out /tmp/grade2.json") == 0);
  Json gr2 = load_json_file("/tmp/grade2.json");
  CHECK(gr2["naturally_graded"] == "no");
  CHECK(gr2["component_dims"] == Json::array({2, 1, 1, 1, 1}));
}

TEST_CASE("cli iso exit codes") {
  REQUIRE(run_cli("build --family mu1 --k 1 --dim 5 --out /tmp/m11.json") == 0);
  REQUIRE(run_cli("build --family mu1 --k 2 --dim 5 --out /tmp/m12.json") == 0);
  CHECK(run_cli("iso /tmp/m11.json /tmp/m11.json --search") == 0);
  CHECK(run_cli("iso /tmp/m11.json /tmp/m12.json --search") == 1);

  // over GF(2) the full search settles isomorphic pairs with a witness file
  REQUIRE(run_cli("build --family lambda --k 2 --field gf2 --out /tmp/l2.json") == 0);
  CHECK(run_cli("iso /tmp/l2.json /tmp/l2.json --search --out /tmp/iso.json") == 0);
  Json iso = load_json_file("/tmp/iso.json");
  CHECK(iso["outcome"] == "witness");
  std::ofstream("/tmp/wit.json") << dump_json(iso["witness"]);
  CHECK(run_cli("iso /tmp/l2.json /tmp/l2.json --witness /tmp/wit.json") == 0);

  // a generic rational transport stays inconclusive without a complete search
  AlgebraTable base = build(FamilyId::mu0(4));
  Matrix m(4, 4, Q);
  Rng rng(99);
  do {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = rng.scalar(Q);
  } while (rank(m) < 4);
  std::ofstream("/tmp/moved.json") << dump_json(table_to_json(transport(base, m)));
  CHECK(run_cli("iso /tmp/a.json /tmp/moved.json") == 2);
}

TEST_CASE("cli error codes") {
  CHECK(run_cli("definitely-not-a-subcommand") == 64);
  CHECK(run_cli("build --family nonsense --dim 4") == 64);
  CHECK(run_cli("verify-paper") == 64);  // --suite is required

  std::ofstream("/tmp/broken.json") << "{ not json";
  CHECK(run_cli("check /tmp/broken.json") == 65);
  std::ofstream("/tmp/badfield.json") << R"({"schema_version":1,"field":"R","dim":1,"products":[]})";
  CHECK(run_cli("check /tmp/badfield.json") == 65);
}

TEST_CASE("cli budget exhaustion exits 70 under NILALG_MAX_NODES") {
  REQUIRE(run_cli("build --family pi --k 1 --alpha 1 --field gf5 --out /tmp/p11.json") == 0);
  REQUIRE(run_cli("build --family pi --k 2 --field gf5 --out /tmp/p2.json") == 0);
  // invariants tie on this pair, so the full search starts and hits the cap
  CHECK(run_cli("iso /tmp/p11.json /tmp/p2.json --search", "/tmp/nilalg_cli_out.txt",
                "NILALG_MAX_NODES=1 ") == 70);
  // with the default budget the pair is settled as distinct
  CHECK(run_cli("iso /tmp/p11.json /tmp/p2.json --search") == 1);
}

TEST_CASE("cli outputs match frozen golden files byte for byte") {
  REQUIRE(run_cli("build --family mu0 --dim 4 --out /tmp/golden_check_a.json") == 0);
  CHECK(slurp("/tmp/golden_check_a.json") == slurp(std::string(NILALG_GOLDEN_DIR) + "/cli/mu0_4_table.json"));
  REQUIRE(run_cli("census --dim 2 --field gf2 --classify --out /tmp/golden_check_c.json") == 0);
  CHECK(slurp("/tmp/golden_check_c.json") == slurp(std::string(NILALG_GOLDEN_DIR) + "/cli/census_gf2_dim2.json"));
}

TEST_CASE("cli census and determinism") {
  REQUIRE(run_cli("census --dim 2 --field gf2 --classify --out /tmp/c2a.json --csv /tmp/c2.csv") == 0);
  REQUIRE(run_cli("census --dim 2 --field gf2 --classify --out /tmp/c2b.json --workers 3") == 0);
  CHECK(slurp("/tmp/c2a.json") == slurp("/tmp/c2b.json"));
  Json report = load_json_file("/tmp/c2a.json");
  CHECK(report["iso_class_count"] == 2);
  CHECK(report["nilpotent_count"] == 4);
  std::string csv = slurp("/tmp/c2.csv");
  CHECK(csv.rfind("class,orbit_size,classification,nilindex,table\n", 0) == 0);

  // identical argv + seed give byte-identical reports
  REQUIRE(run_cli("build --family pi --k 8 --alpha -3/2 --out /tmp/p1.json") == 0);
  REQUIRE(run_cli("build --family pi --k 8 --alpha -3/2 --out /tmp/p2.json") == 0);
  CHECK(slurp("/tmp/p1.json") == slurp("/tmp/p2.json"));
}

TEST_CASE("cli verify-paper smoke suite") {
  // the census suite at dims <= 2 exercises the driver end to end quickly
  CHECK(run_cli("verify-paper --suite census --census-dim 2 --out /tmp/vp.json") == 0);
  Json vp = load_json_file("/tmp/vp.json");
  CHECK(vp["pass"] == true);
  CHECK(vp["checks"].size() == 2);
}
