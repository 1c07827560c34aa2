#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcl/representation.hpp"
#include "mcl/serialization.hpp"

using namespace mcl;

TEST_CASE("lattice element encoding") {
  const MclElement m = MclElement::from_codes(Modulus(5), {1, 0, 4});
  const nlohmann::json j = to_json(m);
  CHECK(j["modulus"] == 5);
  CHECK(j["entries"][0] == 1);
  CHECK(j["entries"][1] == "X");
  CHECK(j["entries"][2] == 4);
  CHECK(element_from_json(j) == m);

  const nlohmann::json bottom = {{"modulus", 5}, {"bottom", true}};
  CHECK(element_from_json(bottom).is_bottom());
  CHECK(to_json(MclElement::bottom(Modulus(5), IndexSet(2)))["bottom"] == true);

  nlohmann::json bad = j;
  bad["entries"][1] = "Y";
  CHECK_THROWS_AS(element_from_json(bad), std::invalid_argument);
}

TEST_CASE("element encoding round-trips across the lattice") {
  for (const auto& m : enumerate_elements(Modulus(5), IndexSet(2), true)) {
    CHECK(element_from_json(to_json(m)) == m);
  }
}

TEST_CASE("permutation and wreath encoding") {
  const Perm p({2, 0, 1});
  CHECK(to_json(p) == nlohmann::json({2, 0, 1}));
  CHECK(perm_from_json(to_json(p)) == p);

  const WreathElement w({Perm({1, 0}), Perm({0, 1})}, Perm({1, 0}));
  const nlohmann::json j = to_json(w);
  CHECK(j["base"].size() == 2);
  CHECK(j["top"] == nlohmann::json({1, 0}));
  CHECK(wreath_from_json(j) == w);
}

TEST_CASE("matrix encoding is exact and deterministic") {
  const CMatrix U = fourier_matrix(4);
  const std::string s1 = matrix_to_json_string(U);
  const std::string s2 = matrix_to_json_string(U);
  CHECK(s1 == s2);

  const CMatrix back = matrix_from_json(nlohmann::json::parse(s1));
  REQUIRE(back.rows() == 4);
  REQUIRE(back.cols() == 4);
  // 17 significant digits round-trip doubles exactly
  CHECK(back == U);

  const nlohmann::json j = nlohmann::json::parse(s1);
  CHECK(j["rows"] == 4);
  CHECK(j["cols"] == 4);
  CHECK(j["data"].size() == 4);
  CHECK(j["data"][0][0][0] == 0.5);
}

TEST_CASE("matrix decoding validates shape") {
  nlohmann::json j = nlohmann::json::parse(matrix_to_json_string(shift_matrix(2)));
  j["rows"] = 3;
  CHECK_THROWS_AS(matrix_from_json(j), std::invalid_argument);
}
