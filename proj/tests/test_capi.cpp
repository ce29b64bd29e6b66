#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <hilbplane.h>

namespace {

std::string eval_ok(const char* command, const char* request) {
  char* out = nullptr;
  int rc = hilb_eval(command, request, &out);
  REQUIRE(rc == HILB_OK);
  REQUIRE(out != nullptr);
  std::string result(out);
  hilb_string_free(out);
  return result;
}

int eval_rc(const char* command, const char* request) {
  char* out = nullptr;
  int rc = hilb_eval(command, request, &out);
  if (out) hilb_string_free(out);
  return rc;
}

} // namespace

TEST_CASE("version and command list") {
  REQUIRE(hilb_version() != nullptr);
  char* commands = hilb_commands();
  REQUIRE(commands != nullptr);
  std::string list(commands);
  hilb_string_free(commands);
  CHECK(list.find("cone.deg1") != std::string::npos);
  CHECK(list.find("verify") != std::string::npos);
  CHECK(list.find("kva") != std::string::npos);
}

TEST_CASE("ring handles") {
  hilb_ring* ring = hilb_ring_new(3);
  REQUIRE(ring != nullptr);
  CHECK(hilb_ring_order(ring) == 3);
  CHECK(hilb_ring_dim(ring) == 6);
  hilb_ring_free(ring);

  CHECK(hilb_ring_new(0) == nullptr);
  CHECK(std::strlen(hilb_last_error()) > 0);
  CHECK(hilb_ring_order(nullptr) == -1);
}

TEST_CASE("ideal handles") {
  hilb_ring* ring = hilb_ring_new(3);
  REQUIRE(ring != nullptr);

  hilb_ideal* ideal = nullptr;
  int is_unit = -1;
  REQUIRE(hilb_ideal_from_generators(ring, "u^2, u*v, v^2", &ideal,
                                     &is_unit) == HILB_OK);
  REQUIRE(ideal != nullptr);
  CHECK(is_unit == 0);
  CHECK(hilb_ideal_colength(ideal) == 3);
  CHECK(hilb_ideal_socle_dim(ideal) == 2);
  CHECK(hilb_ideal_min_generators(ideal) == 3);

  hilb_ideal* theta = hilb_ideal_theta(ring);
  REQUIRE(theta != nullptr);
  CHECK(hilb_ideal_equals(ideal, theta) == 1);

  char* json = hilb_ideal_to_json(ideal);
  REQUIRE(json != nullptr);
  CHECK(std::string(json).find("\"colength\":3") != std::string::npos);
  hilb_string_free(json);

  hilb_ideal* unit = nullptr;
  is_unit = 0;
  CHECK(hilb_ideal_from_generators(ring, "1 + u", &unit, &is_unit) == HILB_OK);
  CHECK(unit == nullptr);
  CHECK(is_unit == 1);

  hilb_ideal* broken = nullptr;
  CHECK(hilb_ideal_from_generators(ring, "u^", &broken, &is_unit) ==
        HILB_ERR_USAGE);
  CHECK(broken == nullptr);

  hilb_ideal_free(theta);
  hilb_ideal_free(ideal);
  hilb_ring_free(ring);
}

TEST_CASE("lattice operations through handles") {
  hilb_ring* ring = hilb_ring_new(3);
  hilb_ideal* u = nullptr;
  hilb_ideal* v = nullptr;
  int is_unit = 0;
  REQUIRE(hilb_ideal_from_generators(ring, "u", &u, &is_unit) == HILB_OK);
  REQUIRE(hilb_ideal_from_generators(ring, "v", &v, &is_unit) == HILB_OK);

  hilb_ideal* meet = hilb_ideal_intersect(u, v);
  REQUIRE(meet != nullptr);
  CHECK(hilb_ideal_colength(meet) == 5);
  hilb_ideal* join = hilb_ideal_sum(u, v);
  REQUIRE(join != nullptr);
  CHECK(hilb_ideal_colength(join) == 1);
  CHECK(hilb_ideal_contains(u, meet) == 1);
  CHECK(hilb_ideal_contains(meet, u) == 0);
  CHECK(hilb_ideal_equals(u, v) == 0);

  // Mixed contexts are an error, not false.
  hilb_ring* other = hilb_ring_new(4);
  hilb_ideal* w = nullptr;
  REQUIRE(hilb_ideal_from_generators(other, "u", &w, &is_unit) == HILB_OK);
  CHECK(hilb_ideal_contains(u, w) == -1);
  CHECK(hilb_ideal_intersect(u, w) == nullptr);

  hilb_ideal_free(w);
  hilb_ring_free(other);
  hilb_ideal_free(join);
  hilb_ideal_free(meet);
  hilb_ideal_free(v);
  hilb_ideal_free(u);
  hilb_ring_free(ring);
}

TEST_CASE("pinned eval outputs") {
  CHECK(eval_ok("cone.deg1", "{\"n\":4}") ==
        "{\"classes\":[{\"a\":0,\"b\":1},{\"a\":1,\"b\":-3}]}");
  CHECK(eval_ok("kva", "{\"a\":7,\"k\":7}") == "{\"result\":\"pass\"}");
  CHECK(eval_ok("ideal.colength",
                "{\"N\":3,\"generators\":[\"u^2\",\"u*v\",\"v^2\"]}") ==
        "{\"colength\":3}");
}

TEST_CASE("eval separates usage from domain errors") {
  CHECK(eval_rc("no.such.command", "{}") == HILB_ERR_USAGE);
  CHECK(eval_rc("cone.deg1", "{\"n\":") == HILB_ERR_USAGE);
  CHECK(eval_rc("cone.deg1", "{}") == HILB_ERR_USAGE);
  CHECK(eval_rc("cone.deg1", "{\"n\":1}") == HILB_ERR_DOMAIN);
  CHECK(eval_rc("kva", "{\"a\":1,\"k\":3}") == HILB_ERR_DOMAIN);
  CHECK(std::strlen(hilb_last_error()) > 0);
  CHECK(eval_rc("cone.deg1", "{\"n\":4}") == HILB_OK);
  CHECK(std::strlen(hilb_last_error()) == 0);
  CHECK(eval_rc("cone.deg1", nullptr) == HILB_ERR_USAGE);
}

TEST_CASE("eval commands cover the library surface") {
  std::string member = eval_ok(
      "betacurve.member",
      "{\"eta\":{\"N\":3,\"generators\":[\"u^2\",\"u*v\",\"v^2\"]},"
      "\"f\":\"u\",\"g\":\"v\",\"t\":\"1\",\"s\":\"0\"}");
  CHECK(member.find("\"colength\":2") != std::string::npos);

  std::string pairing =
      eval_ok("cone.pair",
              "{\"n\":3,\"divisor\":\"3*D - 1/2*B\",\"curve\":\"bl - 2*bn\"}");
  CHECK(pairing.find("\"value\":\"1\"") != std::string::npos);

  std::string h0 = eval_ok(
      "h0",
      "{\"m\":2,\"scheme\":{\"points\":[{\"coords\":[\"1\",\"0\",\"0\"],"
      "\"local\":{\"N\":1,\"generators\":[]}}]}}");
  CHECK(h0.find("\"h0\":5") != std::string::npos);
}
