#include <doctest.h>

#include "oracles.hpp"

using namespace crosspatch;

TEST_CASE("oracle knight graph sizes") {
  CHECK(oracle::brute_knight_moves(Board::rectangle(8, 8)).size() == 168);
  CHECK(oracle::brute_knight_moves(Board::rectangle(3, 3)).size() == 8);
  CHECK(oracle::brute_knight_moves(Board::torus(5, 5)).size() == 100);
}

TEST_CASE("pruned and unpruned two-factor searches agree") {
  for (const Board& b : {Board::rectangle(3, 3), Board::rectangle(4, 4), Board::rectangle(4, 5),
                         Board::rectangle(5, 5), Board::ring3()}) {
    std::uint64_t raw = 0;
    const auto plain = oracle::two_factors(b, &raw, false);
    CHECK(oracle::two_factors(b) == plain);
    CHECK(raw >= plain.size());
  }
}

TEST_CASE("the oracle finds the known small families") {
  CHECK(oracle::two_factors(Board::rectangle(3, 3)).empty());
  const auto four = oracle::two_factors(Board::rectangle(4, 4));
  REQUIRE(four.size() == 1);
  CHECK(four[0].size() == 16);
  CHECK(oracle::count_cycles(four[0]) == 4);
  const auto ring = oracle::two_factors(Board::ring3());
  REQUIRE(ring.size() == 1);
  CHECK(oracle::count_cycles(ring[0]) == 1);
  CHECK_THROWS_AS(oracle::two_factors(Board::rectangle(6, 7)), std::invalid_argument);
}
