#include "scrollacm/json_io.hpp"
#include "scrollacm/random.hpp"

#include <doctest.h>

using namespace scrollacm;

TEST_CASE("scalar encodings") {
  CHECK(integer_json(Integer(5)) == json(5));
  CHECK(integer_json(Integer("123456789012345678901234567890")) == json("123456789012345678901234567890"));
  CHECK(integer_from_json(json("123456789012345678901234567890")) == Integer("123456789012345678901234567890"));
  CHECK(rational_json(Rational(-37, 216)) == json("-37/216"));
  CHECK(rational_from_json(json("3/6")) == Rational(1, 2));
  CHECK(rational_from_json(json(4)) == 4);
  CHECK_THROWS_AS(rational_from_json(json(1.5)), std::invalid_argument);
}

TEST_CASE("structured round trips") {
  const Scroll s(2, 1);
  CHECK(scroll_from_json(to_json(s)) == s);
  CHECK(to_json(s) == json::parse(R"({"theta":2,"epsilon":1})"));
  const DivisorClass d(-2, 7);
  CHECK(divisor_from_json(to_json(d)) == d);
  CHECK(to_json(d) == json::parse(R"({"H":-2,"F":7})"));
  const ChernCharacter c{3, d, -11};
  CHECK(character_from_json(to_json(c)) == c);
  const BraidWord k({-3, 2, -2});
  CHECK(braid_word_from_json(to_json(k)) == k);
  const DimensionVector v{2, 3};
  CHECK(dimension_vector_from_json(to_json(v)) == v);
}

TEST_CASE("pencils and blocks") {
  const MatrixPencil m{Matrix{{1, Rational(1, 2)}}, Matrix{{0, -3}}};
  CHECK(pencil_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(pencil_from_json(json::parse(R"({"rows":1,"cols":2,"M1":[[1]],"M2":[[0,1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(pencil_from_json(json::parse(R"({"rows":1,"cols":1,"M1":[["x"]],"M2":[[0]]})")), std::invalid_argument);
  for (const auto& b : {KWBlock::C(2), KWBlock::B(1, 3), KWBlock::J(Rational(-1, 2), 2), KWBlock::J_infinity(1),
                        KWBlock::Companion(Polynomial({1, 0, 1}), 2), KWBlock::Zero(2, 1)}) {
    CHECK(block_from_json(to_json(b)) == b);
  }
  CHECK(to_json(KWBlock::B(1)) == json::parse(R"({"kind":"B","v":1})"));
  const auto dec = kw_decompose(m);
  const json j = to_json(dec);
  CHECK(j.contains("P"));
  CHECK_FALSE(to_json(dec, false).contains("P"));
}
