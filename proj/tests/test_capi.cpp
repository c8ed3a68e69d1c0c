#include <cstdint>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "pillar/pillar.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  pillar_string_free(s);
  return out;
}

std::string format(const pillar_word* w) {
  char* s = nullptr;
  REQUIRE(pillar_word_format(w, &s) == PILLAR_OK);
  return take(s);
}

}  // namespace

TEST_CASE("version and word round trip") {
  CHECK(std::string(pillar_version()) == "1.0.0");
  pillar_word* u = nullptr;
  pillar_word* v = nullptr;
  REQUIRE(pillar_word_parse(PILLAR_BASIS_XY, 2, "y1 x1^-1", &u) == PILLAR_OK);
  REQUIRE(pillar_word_parse(PILLAR_BASIS_XY, 2, "x1 y2", &v) == PILLAR_OK);
  pillar_word* uv = nullptr;
  REQUIRE(pillar_word_multiply(u, v, &uv) == PILLAR_OK);
  CHECK(format(uv) == "y1 y2");
  CHECK(pillar_word_length(uv) == 2);
  pillar_word* inv = nullptr;
  REQUIRE(pillar_word_invert(uv, &inv) == PILLAR_OK);
  CHECK(format(inv) == "y2^-1 y1^-1");
  CHECK_FALSE(pillar_word_equal(uv, inv));
  CHECK(pillar_word_equal(uv, uv));
  for (auto* w : {u, v, uv, inv}) pillar_word_free(w);
}

TEST_CASE("errors set status, message and position") {
  pillar_word* w = nullptr;
  CHECK(pillar_word_parse(PILLAR_BASIS_XY, 2, "x1 x3", &w) == PILLAR_ERR_INDEX_RANGE);
  CHECK(w == nullptr);
  CHECK(pillar_last_error_position() == 3);
  CHECK(std::string(pillar_last_error()).find("position 3") != std::string::npos);
  CHECK(pillar_word_parse(PILLAR_BASIS_XY, 2, "x1 z1", &w) == PILLAR_ERR_BASIS_MISMATCH);
  CHECK(pillar_word_parse(PILLAR_BASIS_XY, 2, "x1 ?", &w) == PILLAR_ERR_PARSE);
  CHECK(pillar_word_parse(PILLAR_BASIS_XY, 2, nullptr, &w) == PILLAR_ERR_INVALID_ARGUMENT);

  pillar_morphism* f = nullptr;
  CHECK(pillar_sigma_action(0, 1, &f) == PILLAR_ERR_INVALID_ARGUMENT);
  CHECK(pillar_last_error_position() == SIZE_MAX);
  CHECK(pillar_twist_word_action(2, "w2", 0, &f) == PILLAR_ERR_INDEX_RANGE);

  // A successful call clears the error state.
  REQUIRE(pillar_word_parse(PILLAR_BASIS_XY, 2, "x1", &w) == PILLAR_OK);
  CHECK(std::string(pillar_last_error()).empty());
  pillar_word_free(w);
}

TEST_CASE("morphisms through the C interface") {
  pillar_morphism* s0 = nullptr;
  REQUIRE(pillar_sigma_action(0, 2, &s0) == PILLAR_OK);
  pillar_morphism* tw = nullptr;
  REQUIRE(pillar_twist_word_action(2, "a2^-1 w1 a1 b1 w1 a1 b1", 0, &tw) == PILLAR_OK);
  int eq = 0;
  REQUIRE(pillar_morphism_equal(s0, tw, &eq) == PILLAR_OK);
  CHECK(eq == 1);
  int fixes = 0;
  REQUIRE(pillar_morphism_fixes_relator(s0, &fixes) == PILLAR_OK);
  CHECK(fixes == 1);

  pillar_word* y1 = nullptr;
  REQUIRE(pillar_word_parse(PILLAR_BASIS_XY, 2, "y1", &y1) == PILLAR_OK);
  pillar_word* img = nullptr;
  REQUIRE(pillar_morphism_apply(s0, y1, 0, &img) == PILLAR_OK);
  CHECK(format(img) == "y2 x2^-1 y2^-1 x1 y1^-1 x1^-1 y2 x2 y2^-1");

  pillar_morphism* both = nullptr;
  REQUIRE(pillar_morphism_compose(s0, tw, 0, &both) == PILLAR_OK);
  pillar_morphism* psi = nullptr;
  REQUIRE(pillar_braid_psi_action(2, "b1", 0, &psi) == PILLAR_OK);
  pillar_morphism* s1 = nullptr;
  REQUIRE(pillar_sigma_action(1, 2, &s1) == PILLAR_OK);
  REQUIRE(pillar_morphism_equal(psi, s1, &eq) == PILLAR_OK);
  CHECK(eq == 1);

  pillar_morphism* yz = nullptr;
  REQUIRE(pillar_sigma_yz_action(1, 3, &yz) == PILLAR_OK);
  pillar_morphism* artin = nullptr;
  REQUIRE(pillar_braid_artin_action(3, "b1 b2", 0, &artin) == PILLAR_OK);
  pillar_morphism* id = nullptr;
  REQUIRE(pillar_identity(PILLAR_BASIS_ABSTRACT, 3, &id) == PILLAR_OK);
  REQUIRE(pillar_morphism_equal(artin, id, &eq) == PILLAR_OK);
  CHECK(eq == 0);

  pillar_word_free(y1);
  pillar_word_free(img);
  for (auto* f : {s0, tw, both, psi, s1, yz, artin, id}) pillar_morphism_free(f);
}

TEST_CASE("JSON export round trip") {
  pillar_morphism* f = nullptr;
  REQUIRE(pillar_twist_word_action(2, "a1 b1", 0, &f) == PILLAR_OK);
  char* text = nullptr;
  REQUIRE(pillar_morphism_to_json(f, &text) == PILLAR_OK);
  const std::string json = take(text);
  const auto doc = nlohmann::json::parse(json);
  CHECK(doc["basis"]["kind"] == "xy");
  CHECK(doc["basis"]["genus_or_rank"] == 2);
  CHECK(doc["images"]["x1"] == "x1 y1 x1^-1");
  CHECK(doc["images"]["y1"] == "y1 x1^-1");

  pillar_morphism* back = nullptr;
  REQUIRE(pillar_morphism_from_json(json.c_str(), &back) == PILLAR_OK);
  int eq = 0;
  REQUIRE(pillar_morphism_equal(f, back, &eq) == PILLAR_OK);
  CHECK(eq == 1);
  CHECK(pillar_morphism_from_json("{\"basis\":", &back) == PILLAR_ERR_PARSE);
  CHECK(pillar_morphism_from_json(R"({"basis":{"kind":"xy","genus_or_rank":1},"images":{"x1":"x1"}})",
                                  &back) == PILLAR_ERR_PARSE);
  pillar_morphism_free(f);
  pillar_morphism_free(back);
}

TEST_CASE("braid word problem and verification reports") {
  int trivial = -1;
  REQUIRE(pillar_braid_is_trivial(3, "b1 b2 b1 b2^-1 b1^-1 b2^-1", 0, &trivial) == PILLAR_OK);
  CHECK(trivial == 1);
  REQUIRE(pillar_braid_is_trivial(3, "b1", 0, &trivial) == PILLAR_OK);
  CHECK(trivial == 0);
  CHECK(pillar_braid_is_trivial(2, "b2", 0, &trivial) == PILLAR_ERR_INDEX_RANGE);

  pillar_report* r = nullptr;
  REQUIRE(pillar_verify(3, PILLAR_CHECK_FACTORIZATION, 0, 0, &r) == PILLAR_OK);
  CHECK(pillar_report_holds(r) == 1);
  CHECK(pillar_report_case_count(r) == 3);
  char* s = nullptr;
  REQUIRE(pillar_report_to_json(r, &s) == PILLAR_OK);
  const auto doc = nlohmann::json::parse(take(s));
  CHECK(doc["genus"] == 3);
  CHECK(doc["cases"].size() == 3);
  CHECK(doc["cases"][0]["holds"] == true);
  REQUIRE(pillar_report_to_text(r, &s) == PILLAR_OK);
  CHECK(take(s).find("ok") != std::string::npos);
  pillar_report_free(r);

  CHECK(pillar_verify(1, PILLAR_CHECK_FACTORIZATION, 0, 0, &r) == PILLAR_ERR_INVALID_ARGUMENT);
  CHECK(pillar_verify(2, 0, 0, 0, &r) == PILLAR_ERR_INVALID_ARGUMENT);
  CHECK(pillar_verify(2, 1u << 12, 0, 0, &r) == PILLAR_ERR_INVALID_ARGUMENT);
  REQUIRE(pillar_verify(1, PILLAR_CHECK_RELATOR | PILLAR_CHECK_YZ_ROUNDTRIP, 0, 0, &r) == PILLAR_OK);
  CHECK(pillar_report_holds(r) == 1);
  pillar_report_free(r);
}

TEST_CASE("budget errors") {
  pillar_morphism* f = nullptr;
  std::string long_word;
  for (int k = 0; k < 20; ++k) long_word += "a1 b1^-1 ";
  CHECK(pillar_twist_word_action(2, long_word.c_str(), 1000, &f) == PILLAR_ERR_BUDGET);
  CHECK(f == nullptr);
}
