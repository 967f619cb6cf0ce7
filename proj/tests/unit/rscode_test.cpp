#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rsdh/rscode.hpp"

using namespace rsdh;

namespace {

std::vector<std::uint64_t> decode_word(std::uint64_t enc, std::uint64_t q, unsigned n) {
  std::vector<std::uint64_t> v(n);
  for (unsigned i = 0; i < n; ++i) {
    v[i] = enc % q;
    enc /= q;
  }
  return v;
}

}  // namespace

TEST_CASE("construction, flavors, and validation") {
  auto f5 = Field::prime_field(5);
  auto std52 = RSCode::standard(f5, 2);
  CHECK(std52->n() == 4);
  CHECK(std52->k() == 2);
  CHECK(std52->covering_radius() == 2);
  CHECK(std52->flavor() == CodeFlavor::standard);
  CHECK(std52->eval_set() == std::vector<std::uint64_t>{1, 2, 3, 4});

  auto ext52 = RSCode::extended(f5, 2);
  CHECK(ext52->n() == 5);
  CHECK(ext52->flavor() == CodeFlavor::extended);

  auto gen = RSCode::make(f5, {0, 2, 3}, 1);
  CHECK(gen->flavor() == CodeFlavor::generalized);
  // Same point set as standard but reordered: still generalized (order is
  // part of the code's identity).
  CHECK(RSCode::make(f5, {4, 3, 2, 1}, 2)->flavor() == CodeFlavor::generalized);

  CHECK_THROWS_AS(RSCode::make(f5, {0, 0, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(RSCode::make(f5, {0, 7}, 1), std::invalid_argument);
  CHECK_THROWS_AS(RSCode::make(f5, {0, 1, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(RSCode::make(f5, {0, 1, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(RSCode::make(f5, {0}, 1), std::invalid_argument);
}

TEST_CASE("encode, word_from_poly, and word_poly agree") {
  auto f5 = Field::prime_field(5);
  auto code = RSCode::standard(f5, 2);

  // Message (a_1, a_2) encodes f = a_2 x + a_1 evaluated on (1, 2, 3, 4).
  const ReceivedWord w = code->encode(std::vector<std::uint64_t>{1, 2});
  CHECK(w.values == std::vector<std::uint64_t>{3, 0, 2, 4});

  const UPoly g = parse_upoly(f5, "x^2");
  const ReceivedWord wg = code->word_from_poly(g);
  CHECK(wg.values == std::vector<std::uint64_t>{1, 4, 4, 1});
  CHECK(code->word_poly(wg) == g);

  CHECK_THROWS_AS(code->encode(std::vector<std::uint64_t>{1}), std::invalid_argument);
  CHECK_THROWS_AS(code->word({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(code->word({1, 2, 3, 9}), std::invalid_argument);
  CHECK_THROWS_AS(code->word_from_poly(parse_upoly(f5, "x^4")), std::invalid_argument);

  // Word encodings are little-endian base q.
  CHECK(wg.encoding() == 1 + 4 * 5 + 4 * 25 + 1 * 125);
}

TEST_CASE("both oracles agree on every word of a small code") {
  auto f5 = Field::prime_field(5);
  for (const auto& code :
       {RSCode::standard(f5, 2), RSCode::make(f5, {0, 1, 3, 4}, 2)}) {
    const std::uint64_t q = f5->q();
    for (std::uint64_t enc = 0; enc < 625; ++enc) {
      const ReceivedWord w = code->word(decode_word(enc, q, code->n()));
      const auto a = code->distance_to_code(w, DistanceOracle::subset_interpolation);
      const auto b = code->distance_to_code(w, DistanceOracle::codeword_enumeration);
      CHECK(a.distance == b.distance);
      CHECK(a.max_agreement == b.max_agreement);
      CHECK(a.is_deep_hole == b.is_deep_hole);
      CHECK(a.witness == b.witness);
      // The witness generates a codeword at the reported distance.
      const ReceivedWord nearest = code->word_from_poly(a.witness);
      unsigned dist = 0;
      for (unsigned i = 0; i < code->n(); ++i) dist += (nearest.values[i] != w.values[i]);
      CHECK(dist == a.distance);
    }
  }
}

TEST_CASE("multithreaded oracles return the identical verdict") {
  auto f7 = Field::prime_field(7);
  auto code = RSCode::standard(f7, 3);
  const ReceivedWord w = code->word({1, 5, 2, 0, 6, 3});
  for (auto oracle : {DistanceOracle::subset_interpolation, DistanceOracle::codeword_enumeration}) {
    const auto a = code->distance_to_code(w, oracle, 1);
    const auto b = code->distance_to_code(w, oracle, 4);
    CHECK(a.distance == b.distance);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("degree-k words of a standard code are deep holes") {
  auto f5 = Field::prime_field(5);
  auto code = RSCode::standard(f5, 2);
  const DeepHoleVerdict v =
      code->distance_to_code(code->word_from_poly(parse_upoly(f5, "x^2")),
                             DistanceOracle::codeword_enumeration);
  CHECK(v.is_deep_hole);
  CHECK(v.distance == 2);
  CHECK(v.max_agreement == 2);
}

TEST_CASE("codewords come back at distance zero with themselves as witness") {
  auto f5 = Field::prime_field(5);
  auto code = RSCode::standard(f5, 2);
  const UPoly g = parse_upoly(f5, "2x + 3");
  for (auto oracle : {DistanceOracle::subset_interpolation, DistanceOracle::codeword_enumeration}) {
    const auto v = code->distance_to_code(code->word_from_poly(g), oracle);
    CHECK_FALSE(v.is_deep_hole);
    CHECK(v.distance == 0);
    CHECK(v.max_agreement == code->n());
    CHECK(v.witness == g);
  }
}

TEST_CASE("extended code pushes degree-k words strictly inside the covering radius") {
  auto f5 = Field::prime_field(5);
  auto ext = RSCode::extended(f5, 2);
  const auto v = ext->distance_to_code(ext->word_from_poly(parse_upoly(f5, "x^3")),
                                       DistanceOracle::codeword_enumeration);
  CHECK_FALSE(v.is_deep_hole);
  CHECK(v.distance == 2);
  CHECK(v.distance < ext->covering_radius());
  CHECK(v.witness == parse_upoly(f5, "x"));
}

TEST_CASE("census counts match full enumeration") {
  auto f3 = Field::prime_field(3);
  const CensusResult c1 = RSCode::standard(f3, 1)->enumerate_deep_holes();
  CHECK(c1.total_words == 9);
  CHECK(c1.deep_holes == 6);

  auto f4 = Field::make(2, 2, {1, 1, 1});
  const CensusResult c2 = RSCode::standard(f4, 1)->enumerate_deep_holes();
  CHECK(c2.total_words == 64);
  CHECK(c2.deep_holes == 24);

  auto f5 = Field::prime_field(5);
  const CensusResult c3 = RSCode::standard(f5, 2)->enumerate_deep_holes(4);
  CHECK(c3.total_words == 625);
  CHECK(c3.deep_holes == 200);
  CHECK(c3.sample.size() == 4);
}

TEST_CASE("census per-word callback streams every word in encoding order") {
  auto f3 = Field::prime_field(3);
  auto code = RSCode::standard(f3, 1);
  std::uint64_t expected = 0, deep_seen = 0;
  code->enumerate_deep_holes(0, 1, [&](std::uint64_t enc, unsigned dist, bool deep) {
    CHECK(enc == expected);
    ++expected;
    deep_seen += deep;
    // Cross-check each row against the direct oracle.
    const auto v = code->distance_to_code(code->word(decode_word(enc, 3, 2)),
                                          DistanceOracle::codeword_enumeration);
    CHECK(v.distance == dist);
    CHECK(v.is_deep_hole == deep);
  });
  CHECK(expected == 9);
  CHECK(deep_seen == 6);
}

TEST_CASE("census results are independent of the worker count") {
  auto f5 = Field::prime_field(5);
  auto code = RSCode::standard(f5, 2);
  const CensusResult a = code->enumerate_deep_holes(8, 1);
  const CensusResult b = code->enumerate_deep_holes(8, 4);
  CHECK(a.deep_holes == b.deep_holes);
  REQUIRE(a.sample.size() == b.sample.size());
  for (std::size_t i = 0; i < a.sample.size(); ++i)
    CHECK(a.sample[i].values == b.sample[i].values);
}

TEST_CASE("work budgets are enforced") {
  auto f101 = Field::prime_field(101);
  auto big = RSCode::standard(f101, 4);  // q^k = 101^4 > 10^7
  const ReceivedWord w = big->word(std::vector<std::uint64_t>(big->n(), 1));
  CHECK_THROWS_AS(big->distance_to_code(w, DistanceOracle::codeword_enumeration),
                  BudgetExceeded);
  CHECK_THROWS_AS(big->distance_to_code(w, DistanceOracle::subset_interpolation),
                  BudgetExceeded);  // C(100, 5) > 10^7
  CHECK_THROWS_AS(big->enumerate_deep_holes(), BudgetExceeded);
}

TEST_CASE("words are bound to their code") {
  auto f5 = Field::prime_field(5);
  auto a = RSCode::standard(f5, 2);
  auto b = RSCode::extended(f5, 2);
  const ReceivedWord w = a->word({1, 2, 3, 4});
  CHECK_THROWS_AS(b->distance_to_code(w, DistanceOracle::codeword_enumeration),
                  std::invalid_argument);
  CHECK_THROWS_AS(b->word_poly(w), std::invalid_argument);
}
