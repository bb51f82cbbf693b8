#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "fusionkit/capi.h"

using nlohmann::json;

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { fk_string_free(s); }
  json parsed() const { return json::parse(s); }
};

struct Ring {
  fk_ring* r = nullptr;
  ~Ring() { fk_ring_free(r); }
};

} // namespace

TEST_CASE("construction and serialization round trip through handles") {
  Ring cm;
  REQUIRE(fk_build_cm(8, &cm.r) == FK_OK);
  long rank = 0;
  REQUIRE(fk_ring_rank(cm.r, &rank) == FK_OK);
  CHECK(rank == 12);

  Str text;
  REQUIRE(fk_ring_to_json(cm.r, &text.s) == FK_OK);
  Ring back;
  REQUIRE(fk_ring_from_json(text.s, &back.r) == FK_OK);
  Str text2;
  REQUIRE(fk_ring_to_json(back.r, &text2.s) == FK_OK);
  CHECK(std::string(text.s) == text2.s);

  auto j = text.parsed();
  CHECK(j["rank"] == 12);
  CHECK(j["meta"]["family"] == "cm");
}

TEST_CASE("error paths set status and message") {
  CHECK(fk_build_cm(8, nullptr) == FK_ERR_ARG);
  Ring bad;
  CHECK(fk_build_cm(7, &bad.r) == FK_ERR_INVALID);
  CHECK(std::strlen(fk_last_error()) > 0);
  CHECK(fk_ring_from_json("{oops", &bad.r) == FK_ERR_PARSE);
  Ring nising;
  CHECK(fk_build_nising(3, "nonsense", &nising.r) == FK_ERR_PARSE);
  CHECK(fk_build_nising(1, "1/4", &nising.r) == FK_ERR_INVALID);

  Str rep;
  int passed = 0;
  CHECK(fk_verify("no-such-theorem", "{}", &rep.s, &passed) == FK_ERR_ARG);
}

TEST_CASE("validation report over the C boundary") {
  Ring ising;
  REQUIRE(fk_build_ising(&ising.r) == FK_OK);
  Str rep;
  int valid = 0;
  REQUIRE(fk_ring_validate(ising.r, &rep.s, &valid) == FK_OK);
  CHECK(valid == 1);
  CHECK(rep.parsed()["valid"] == true);

  // x (x) x misses the unit although x is self-dual: rigidity fails
  auto j = json::parse(R"({"rank":2,"labels":["1","x"],"unit":0,"dual":[0,1],
      "coeffs":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,1,1]]})");
  Ring broken;
  REQUIRE(fk_ring_from_json(j.dump().c_str(), &broken.r) == FK_OK);
  Str rep2;
  REQUIRE(fk_ring_validate(broken.r, &rep2.s, &valid) == FK_OK);
  CHECK(valid == 0);
  CHECK(rep2.parsed()["issues"].size() > 0);
}

TEST_CASE("theorem suites over the C boundary") {
  Str rep;
  int passed = 0;
  REQUIRE(fk_verify("fact-cm", R"({"M": 12})", &rep.s, &passed) == FK_OK);
  CHECK(passed == 1);
  auto j = rep.parsed();
  CHECK(j["details"]["N"] == 2);
  CHECK(j["details"]["m_odd"] == 3);
  CHECK(j["details"]["witness_verified"] == true);

  Str rep2;
  REQUIRE(fk_verify("nofact", R"({"N": 2})", &rep2.s, &passed) == FK_OK);
  CHECK(passed == 1);

  Str rep3;
  REQUIRE(fk_verify("braiding-count", R"({"M": 4})", &rep3.s, &passed) == FK_OK);
  CHECK(passed == 1);
  CHECK(rep3.parsed()["details"]["count_zeta_1"] == 4);
  CHECK(rep3.parsed()["details"]["count_zeta_-1"] == 4);

  Str rep4;
  REQUIRE(fk_verify("degeneracy", R"({"N": 3, "zeta": "-1"})", &rep4.s, &passed) ==
          FK_OK);
  CHECK(passed == 1);
}

TEST_CASE("braidings, center and decomposition reports") {
  Str braidings;
  REQUIRE(fk_enumerate_braidings(4, nullptr, 1, &braidings.s) == FK_OK);
  auto bj = braidings.parsed();
  CHECK(bj["total"] == 8);
  CHECK(bj["by_zeta"][0]["braidings"][0].contains("form"));

  Str center;
  REQUIRE(fk_induced_center(3, "1/16", &center.s) == FK_OK);
  auto cj = center.parsed();
  CHECK(cj["verdict"] == "SlightlyDegenerate");
  CHECK(cj["center"].size() == 2);

  Ring prod;
  {
    Ring i2, p10;
    REQUIRE(fk_build_nising(2, "1", &i2.r) == FK_OK);
    long orders[] = {10};
    REQUIRE(fk_build_pointed(orders, 1, &p10.r) == FK_OK);
    REQUIRE(fk_deligne_product(i2.r, p10.r, &prod.r) == FK_OK);
  }
  Str trace;
  int decomposable = 0;
  REQUIRE(fk_decompose(prod.r, &trace.s, &decomposable) == FK_OK);
  CHECK(decomposable == 1);
  auto tj = trace.parsed();
  CHECK(tj["status"] == "ok");
  CHECK(tj["trace"]["N"] == 2);

  Ring cm6, target;
  REQUIRE(fk_build_cm(6, &cm6.r) == FK_OK);
  {
    Ring ising, p3;
    REQUIRE(fk_build_ising(&ising.r) == FK_OK);
    long orders[] = {3};
    REQUIRE(fk_build_pointed(orders, 1, &p3.r) == FK_OK);
    REQUIRE(fk_deligne_product(ising.r, p3.r, &target.r) == FK_OK);
  }
  Str iso;
  int found = 0;
  REQUIRE(fk_isomorphic(cm6.r, target.r, &iso.s, &found) == FK_OK);
  CHECK(found == 1);
  CHECK(iso.parsed()["witness_verified"] == true);
}

TEST_CASE("premetric classification over the C boundary") {
  json pm = {{"invariant_factors", {2}},
             {"q", {{{0}, "0/1"}, {{1}, "1/2"}}}};
  Str rep;
  REQUIRE(fk_classify_premetric(pm.dump().c_str(), &rep.s) == FK_OK);
  CHECK(rep.parsed()["verdict"] == "SlightlyDegenerate");

  CHECK(fk_classify_premetric("{\"invariant_factors\": [2]}", &rep.s) ==
        FK_ERR_PARSE);
}

TEST_CASE("forms embedded in braidings reports classify consistently") {
  Str report;
  REQUIRE(fk_enumerate_braidings(4, "-1", 1, &report.s) == FK_OK);
  auto j = report.parsed();
  int nondegenerate = 0;
  for (const auto& entry : j["by_zeta"][0]["braidings"]) {
    Str verdict;
    REQUIRE(fk_classify_premetric(entry["form"].dump().c_str(), &verdict.s) ==
            FK_OK);
    if (verdict.parsed()["verdict"] == "NonDegenerate") ++nondegenerate;
  }
  CHECK(nondegenerate == 4); // every primitive 8th root is non-degenerate
}

TEST_CASE("the lattice DOT export is deterministic") {
  Ring ising;
  REQUIRE(fk_build_ising(&ising.r) == FK_OK);
  Str dot1, dot2;
  REQUIRE(fk_lattice_dot(ising.r, &dot1.s) == FK_OK);
  REQUIRE(fk_lattice_dot(ising.r, &dot2.s) == FK_OK);
  CHECK(std::string(dot1.s) == dot2.s);
  CHECK(std::string(dot1.s).find("digraph") == 0);
  CHECK(std::string(dot1.s).find("pointed") != std::string::npos);
}
