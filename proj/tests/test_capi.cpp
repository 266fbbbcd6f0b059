// Exercises the shared library through its C interface only.
#include <doctest.h>

#include <string>
#include <vector>

#include "ipf/ipf.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ipf_string_free(s);
  return out;
}

int collect(int order, const int* cells, void* user) {
  auto* out = static_cast<std::vector<std::vector<int>>*>(user);
  out->emplace_back(cells, cells + order * order);
  return 1;
}

}  // namespace

TEST_CASE("create, inspect and format a semigroup") {
  const int z3[] = {1, 2, 0, 2, 0, 1, 0, 1, 2};
  ipf_semigroup* s = nullptr;
  REQUIRE(ipf_semigroup_create(3, z3, &s) == IPF_OK);
  CHECK(ipf_semigroup_order(s) == 3);
  CHECK(ipf_semigroup_mul(s, 0, 1) == 2);
  CHECK(ipf_semigroup_mul(s, 0, 7) == -1);
  CHECK(ipf_semigroup_is_commutative(s) == 1);
  char* text = nullptr;
  REQUIRE(ipf_semigroup_format(s, &text) == IPF_OK);
  CHECK(take(text) == "3\n1 2 0\n2 0 1\n0 1 2\n");
  char* json = nullptr;
  REQUIRE(ipf_semigroup_describe(s, &json) == IPF_OK);
  CHECK(take(json).find("\"identity\":2") != std::string::npos);
  ipf_semigroup_destroy(s);
}

TEST_CASE("errors carry a status and a message") {
  const int bad[] = {1, 0, 0, 0};
  ipf_semigroup* s = nullptr;
  CHECK(ipf_semigroup_create(2, bad, &s) == IPF_ERR_NOT_ASSOCIATIVE);
  CHECK(s == nullptr);
  CHECK(std::string(ipf_last_error()).find("(0,0,1)") != std::string::npos);
  CHECK(std::string(ipf_status_name(IPF_ERR_NOT_ASSOCIATIVE)) == "NotAssociative");
  CHECK(ipf_semigroup_parse("2\n0 1\n", &s) == IPF_ERR_PARSE);
  CHECK(ipf_semigroup_load("/nonexistent", &s) == IPF_ERR_IO);
  CHECK(ipf_semigroup_create(2, nullptr, &s) == IPF_ERR_INVALID_ARGUMENT);
  const char* params[] = {"0"};
  CHECK(ipf_generate("cyclic-group", params, 1, &s, nullptr) == IPF_ERR_INVALID_PARAMETERS);
  CHECK(ipf_generate("no-such-family", params, 1, &s, nullptr) == IPF_ERR_INVALID_PARAMETERS);
}

TEST_CASE("generate, products and constants") {
  const char* params[] = {"3", "2"};
  ipf_semigroup* s = nullptr;
  REQUIRE(ipf_generate("group-over-nil", params, 2, &s, nullptr) == IPF_OK);
  CHECK(ipf_semigroup_order(s) == 5);

  char* json = nullptr;
  REQUIRE(ipf_constants(s, IPF_CONST_I | IPF_CONST_D, nullptr, &json) == IPF_OK);
  const auto constants = take(json);
  CHECK(constants.find("\"kind\":\"ErdosBurgess\",\"value\":4") != std::string::npos);
  CHECK(constants.find("\"kind\":\"Davenport\",\"value\":3") != std::string::npos);

  ipf_sequence* t = nullptr;
  REQUIRE(ipf_sequence_parse("0 0 3\n", &t) == IPF_OK);
  CHECK(ipf_sequence_length(t) == 3);
  CHECK(ipf_sequence_term(t, 2) == 3);
  CHECK(ipf_sequence_term(t, 3) == -1);
  ipf_options opts;
  ipf_options_init(&opts);
  REQUIRE(ipf_products(s, t, &opts, &json) == IPF_OK);
  CHECK(take(json).find("\"anyOrder\"") != std::string::npos);
  int is_free = -1;
  REQUIRE(ipf_free_check(s, t, 0, &opts, &is_free) == IPF_OK);
  CHECK(is_free == 1);
  std::size_t lambda = 0;
  REQUIRE(ipf_lambda(s, t, 0, &opts, &lambda) == IPF_OK);
  CHECK(lambda == 1);  // x1^3 is the identity

  int equivalent = 0;
  REQUIRE(ipf_check_extremal(s, t, &opts, &json, &equivalent) == IPF_OK);
  CHECK(equivalent == 1);
  CHECK(take(json).find("\"weaklyFree\":true") != std::string::npos);

  ipf_sequence* short_seq = nullptr;
  REQUIRE(ipf_sequence_parse("0\n", &short_seq) == IPF_OK);
  CHECK(ipf_check_extremal(s, short_seq, &opts, &json, &equivalent) == IPF_ERR_WRONG_LENGTH);
  ipf_sequence_destroy(short_seq);
  ipf_sequence_destroy(t);
  ipf_semigroup_destroy(s);
}

TEST_CASE("extremal generation returns the companion sequence") {
  const char* params[] = {"mono:3:2", "+identity"};
  ipf_semigroup* s = nullptr;
  ipf_sequence* t = nullptr;
  REQUIRE(ipf_generate("extremal", params, 2, &s, &t) == IPF_OK);
  REQUIRE(t != nullptr);
  char* text = nullptr;
  REQUIRE(ipf_sequence_format(t, &text) == IPF_OK);
  CHECK(take(text) == "0 0 0\n");
  ipf_semigroup_destroy(s);
  ipf_sequence_destroy(t);
}

TEST_CASE("noncommutative input skips D") {
  const char* params[] = {"2"};
  ipf_semigroup* s = nullptr;
  REQUIRE(ipf_generate("left-zero", params, 1, &s, nullptr) == IPF_OK);
  char* json = nullptr;
  REQUIRE(ipf_constants(s, IPF_CONST_I | IPF_CONST_SI | IPF_CONST_D, nullptr, &json) == IPF_OK);
  CHECK(take(json).find("\"skipped\"") != std::string::npos);
  ipf_semigroup_destroy(s);
}

TEST_CASE("enumeration through the callback") {
  std::vector<std::vector<int>> tables;
  REQUIRE(ipf_enumerate(2, 0, 0, nullptr, 0, 0, 1, collect, &tables) == IPF_OK);
  CHECK(tables.size() == 8);
  tables.clear();
  REQUIRE(ipf_enumerate(3, 1, 1, nullptr, 0, 0, 2, collect, &tables) == IPF_OK);
  CHECK(tables.size() == 12);
  CHECK(ipf_enumerate(5, 0, 0, nullptr, 0, 0, 1, collect, &tables) == IPF_ERR_ORDER_TOO_LARGE);
}

TEST_CASE("verification run") {
  ipf_verify_options vo;
  ipf_verify_options_init(&vo);
  vo.max_order = 2;
  vo.checks = "bound,weak-vs-strong";
  char* json = nullptr;
  int passed = 0;
  REQUIRE(ipf_verify(&vo, &json, &passed) == IPF_OK);
  CHECK(passed == 1);
  CHECK(take(json).find("\"failed\": 0") != std::string::npos);
  vo.checks = "bound,bogus";
  CHECK(ipf_verify(&vo, &json, &passed) == IPF_ERR_INVALID_ARGUMENT);
}
