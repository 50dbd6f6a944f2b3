#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <set>
#include <string>

#include <json.hpp>

#include "copart/copart.h"

using nlohmann::json;

namespace {

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { copart_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

struct OwnedSeries {
  copart_series* value = nullptr;
  ~OwnedSeries() { copart_series_free(value); }
};

}  // namespace

TEST_CASE("series lifecycle through the C surface") {
  OwnedSeries f1;
  REQUIRE(copart_series_pochhammer(1, 1, 0, 9, &f1.value) == COPART_OK);
  CHECK(copart_series_truncation(f1.value) == 9);
  CHECK(copart_series_modulus(f1.value) == 0);

  OwnedSeries inv;
  REQUIRE(copart_series_invert(f1.value, &inv.value) == COPART_OK);
  int64_t c9 = 0;
  REQUIRE(copart_series_coeff_int64(inv.value, 9, &c9) == COPART_OK);
  CHECK(c9 == 30);

  OwnedSeries product;
  REQUIRE(copart_series_mul(f1.value, inv.value, &product.value) == COPART_OK);
  for (uint64_t n = 0; n <= 9; ++n) {
    int64_t c = -1;
    REQUIRE(copart_series_coeff_int64(product.value, n, &c) == COPART_OK);
    CHECK(c == (n == 0 ? 1 : 0));
  }
}

TEST_CASE("status codes surface the failure kind") {
  OwnedSeries exact, modular, sum;
  REQUIRE(copart_series_one(0, 4, &exact.value) == COPART_OK);
  REQUIRE(copart_series_one(5, 4, &modular.value) == COPART_OK);
  CHECK(copart_series_mul(exact.value, modular.value, &sum.value) ==
        COPART_ERR_MODULUS_MISMATCH);
  CHECK(std::strlen(copart_last_error()) > 0);

  OwnedSeries theta, inverted;
  REQUIRE(copart_series_theta(1, 2, 0, 6, &theta.value) == COPART_OK);
  OwnedSeries tail;
  REQUIRE(copart_series_extract(theta.value, 1, 3, &tail.value) == COPART_OK);
  CHECK(copart_series_invert(tail.value, &inverted.value) == COPART_ERR_NON_UNIT);

  OwnedSeries big;
  REQUIRE(copart_series_pochhammer(1, 1, 0, 500, &big.value) == COPART_OK);
  OwnedSeries big_inv;
  REQUIRE(copart_series_invert(big.value, &big_inv.value) == COPART_OK);
  int64_t lost = 0;
  CHECK(copart_series_coeff_int64(big_inv.value, 500, &lost) == COPART_ERR_OVERFLOW);
  OwnedString decimal;
  REQUIRE(copart_series_coeff_string(big_inv.value, 500, &decimal.value) == COPART_OK);
  CHECK(decimal.str().size() >= 20);

  OwnedSeries bad;
  CHECK(copart_series_one(1, 3, &bad.value) == COPART_ERR_INVALID_ARGUMENT);
  CHECK(copart_series_pochhammer(0, 1, 0, 3, &bad.value) == COPART_ERR_INVALID_ARGUMENT);
}

TEST_CASE("congruence check through the C surface") {
  OwnedSeries f2, f1sq, f1;
  REQUIRE(copart_series_pochhammer(2, 2, 0, 200, &f2.value) == COPART_OK);
  REQUIRE(copart_series_pochhammer(1, 1, 0, 200, &f1.value) == COPART_OK);
  REQUIRE(copart_series_pow(f1.value, 2, &f1sq.value) == COPART_OK);
  int congruent = 0;
  int64_t mismatch = -2;
  REQUIRE(copart_series_congruent(f2.value, f1sq.value, 2, 200, &congruent, &mismatch) ==
          COPART_OK);
  CHECK(congruent == 1);
  CHECK(mismatch == -1);
  REQUIRE(copart_series_congruent(f2.value, f1sq.value, 3, 200, &congruent, &mismatch) ==
          COPART_OK);
  CHECK(congruent == 0);
  CHECK(mismatch >= 0);
}

TEST_CASE("counting and enumeration surfaces") {
  OwnedString count;
  REQUIRE(copart_count(1, 3, 4, 12, &count.value) == COPART_OK);
  CHECK(count.str() == "7");

  OwnedString listing;
  REQUIRE(copart_enumerate_json(1, 3, 4, 12, &listing.value) == COPART_OK);
  const json doc = json::parse(listing.str());
  CHECK(doc.at("count") == 7);
  CHECK(doc.at("triples").size() == 7);
  CHECK(doc.at("triples")[0].at("sky") == json::array({3, 3, 3, 3}));

  OwnedString refined;
  REQUIRE(copart_refined_counts_json(1, 3, 4, 12, &refined.value) == COPART_OK);
  const json table = json::parse(refined.str());
  CHECK(table.at("total") == "7");

  OwnedString bad;
  CHECK(copart_count(0, 1, 1, 3, &bad.value) == COPART_ERR_UNSUPPORTED_PARAMS);

  OwnedString special;
  REQUIRE(copart_special_sequence_json("cp111", 4, &special.value) == COPART_OK);
  const json seq = json::parse(special.str());
  CHECK(seq.at("values") == json::array({"1", "2", "4", "7", "12"}));
}

TEST_CASE("number-theory helpers") {
  int sym = 0;
  REQUIRE(copart_legendre(3, 7, &sym) == COPART_OK);
  CHECK(sym == -1);
  CHECK(copart_legendre(3, 8, &sym) == COPART_ERR_NOT_PRIME);
  int64_t inv = 0;
  REQUIRE(copart_mod_inverse(24, 49, &inv) == COPART_OK);
  CHECK(inv == 47);
  CHECK(copart_mod_inverse(6, 9, &inv) == COPART_ERR_NOT_INVERTIBLE);
  CHECK(copart_is_prime(49) == 0);
  CHECK(copart_is_prime(9973) == 1);
}

TEST_CASE("dissection report") {
  OwnedString out;
  REQUIRE(copart_dissect_json(5, 0, 200, &out.value) == COPART_OK);
  const json doc = json::parse(out.str());
  CHECK(doc.at("reassembly_matches") == true);
  CHECK(doc.at("residual_class_disjoint") == true);
  CHECK(doc.at("residual_exponent") == -1);
  CHECK(doc.at("components").size() == 5);
  CHECK(copart_dissect_json(8, 0, 50, &out.value) == COPART_ERR_NOT_PRIME);
}

TEST_CASE("claim pipeline over the C surface") {
  OwnedString claim_json;
  REQUIRE(copart_parse_claim("cp(3,1,4); 2n+0; mod 2; zero", &claim_json.value) == COPART_OK);

  OwnedString report_json;
  REQUIRE(copart_verify_claims_json(claim_json.value, 100, 10, &report_json.value) ==
          COPART_OK);
  const json report = json::parse(report_json.str());
  REQUIRE(report.size() == 1);
  CHECK(report[0].at("verdict") == "FAIL");
  CHECK(report[0].at("counterexamples")[0].at("n") == 0);
  CHECK(report[0].at("counterexamples")[0].at("lhs") == 1);

  const std::string path = "capi_report_tmp.json";
  REQUIRE(copart_report_save(report_json.value, path.c_str()) == COPART_OK);
  std::FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::fclose(f);
  std::remove(path.c_str());
}

TEST_CASE("family generation over the C surface") {
  OwnedString claims;
  REQUIRE(copart_build_family_json(R"({"family":"b2-c27","p":5})", &claims.value) == COPART_OK);
  const json doc = json::parse(claims.str());
  CHECK(doc.size() == 4);
  CHECK(doc[0].at("source").at("kind") == "copartition");
  CHECK(doc[0].at("A") == 25);

  OwnedString fixed;
  REQUIRE(copart_build_family_json(
              R"json({"family":"b2-fixed","source":"cp(3,1,4)","A":49,"modulus":2,)json"
              R"json("residues":[3,17,24,31,38,45],"label":"Burson-Eichhorn Corollary 4.6"})json",
              &fixed.value) == COPART_OK);
  CHECK(json::parse(fixed.str()).size() == 6);

  OwnedString bad;
  CHECK(copart_build_family_json(R"({"family":"no-such"})", &bad.value) == COPART_ERR_PARSE);
}

TEST_CASE("search over the C surface") {
  OwnedString out;
  REQUIRE(copart_search_json("cp(5,1,6)", 2, 25, 25, 1500, 10, &out.value) == COPART_OK);
  const json doc = json::parse(out.str());
  std::set<int> offsets;
  for (const auto& c : doc.at("candidates")) offsets.insert(c.at("B").get<int>());
  CHECK(offsets.count(9) == 1);
  CHECK(offsets.count(14) == 1);
  CHECK(offsets.count(19) == 1);
  CHECK(offsets.count(24) == 1);
}

TEST_CASE("verification output is deterministic") {
  OwnedString claim_json;
  REQUIRE(copart_parse_claim("cp(3,1,4); 49n+3; mod 2; zero", &claim_json.value) == COPART_OK);
  OwnedString first, second;
  REQUIRE(copart_verify_claims_json(claim_json.value, 2000, 10, &first.value) == COPART_OK);
  REQUIRE(copart_verify_claims_json(claim_json.value, 2000, 10, &second.value) == COPART_OK);
  CHECK(first.str() == second.str());
}

TEST_CASE("identity suite over the C surface") {
  OwnedString out;
  REQUIRE(copart_identities_json(40, &out.value) == COPART_OK);
  const json doc = json::parse(out.str());
  CHECK(doc.size() == 5);
  for (const auto& entry : doc) CHECK(entry.at("pass") == true);
}
