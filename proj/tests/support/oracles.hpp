#pragma once

// Test-only reference computations. Nothing here uses the cross table, the
// cross-partner formulas or the degree search; knight adjacency and midpoints
// are recomputed from raw coordinates.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "crosspatch/crosspatch.hpp"

namespace oracle {

using crosspatch::Board;
using crosspatch::Point;
using crosspatch::Square;

using Move = std::pair<Square, Square>;  // first < second
using MoveSet = std::vector<Move>;       // sorted

// All knight moves of the board by pairwise comparison of squares.
std::vector<Move> brute_knight_moves(const Board& board);

// Doubled-coordinate midpoint of a move, reduced on wrapped axes.
Point brute_midpoint(const Board& board, const Move& mv);

// Knight moves grouped by midpoint.
std::map<Point, std::vector<Move>> midpoint_groups(const Board& board);

// Every 2-regular spanning subgraph of the knight graph that is closed under
// cross partnership, sorted. With `prune_crosses` off the search visits every
// 2-factor and filters at the leaves; `raw_two_factors` then counts them all.
// Refuses boards with more than 36 squares.
std::vector<MoveSet> two_factors(const Board& board, std::uint64_t* raw_two_factors = nullptr,
                                 bool prune_crosses = true);

MoveSet to_move_set(const crosspatch::CrosspatchGraph& g);

// Independent cycle count of a 2-regular move set.
std::size_t count_cycles(const MoveSet& moves);

// Uniformly random subset of the colorable edges.
crosspatch::RedSet random_red_set(const crosspatch::CrossTable& table, std::mt19937_64& rng);

}  // namespace oracle
