#pragma once

// Knight moves and cross pairs. Two knight moves form a cross when their
// midpoints coincide; that common midpoint is always the midpoint of a unit
// board edge, and every board edge carries at most one cross.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "crosspatch/board.hpp"

namespace crosspatch {

// Undirected; `from < to` after construction through make_move.
struct KnightMove {
  Square from;
  Square to;
  friend auto operator<=>(const KnightMove&, const KnightMove&) = default;
};

KnightMove make_move(Square a, Square b) noexcept;

struct CrossPair {
  BoardEdge edge;
  std::array<KnightMove, 2> moves;
};

// Shortest displacement from `from` to `to`, honoring wrapped axes.
Point displacement(const Board& board, Square from, Square to);
bool is_knight_move(const Board& board, Square a, Square b);

std::vector<KnightMove> knight_moves(const Board& board, Square s);

// nullopt when any of the four squares is off the board.
std::optional<CrossPair> cross_partner(const Board& board, BoardEdge e);

// The board edge whose midpoint is the midpoint of `mv`.
BoardEdge move_to_edge(const Board& board, const KnightMove& mv);

using MoveId = int;

// Integer-id view of all knight moves and cross pairs of one board.
class CrossTable {
 public:
  explicit CrossTable(Board board);

  const Board& board() const noexcept { return board_; }

  int move_count() const noexcept { return static_cast<int>(moves_.size()); }
  const KnightMove& move(MoveId id) const { return moves_.at(static_cast<std::size_t>(id)); }
  std::optional<MoveId> find_move(const KnightMove& mv) const;
  EdgeId edge_of(MoveId id) const { return move_edge_.at(static_cast<std::size_t>(id)); }

  bool colorable(EdgeId e) const { return pair_of_[static_cast<std::size_t>(e)][0] >= 0; }
  const std::array<MoveId, 2>& moves_of(EdgeId e) const {
    return pair_of_.at(static_cast<std::size_t>(e));
  }
  const std::vector<EdgeId>& colorable_edges() const noexcept { return colorable_; }
  // The four (distinct) squares touched by the cross of a colorable edge.
  const std::array<SquareId, 4>& squares_of(EdgeId e) const {
    return cross_squares_.at(static_cast<std::size_t>(e));
  }

  // Colorable surround8 edges of the square in slot `s`.
  std::span<const EdgeId> surround(SquareId s) const { return surround_.at(static_cast<std::size_t>(s)); }
  std::span<const MoveId> moves_at(SquareId s) const { return moves_at_.at(static_cast<std::size_t>(s)); }

 private:
  Board board_;
  std::vector<KnightMove> moves_;
  std::vector<EdgeId> move_edge_;
  std::vector<std::array<MoveId, 2>> pair_of_;
  std::vector<std::array<SquareId, 4>> cross_squares_;
  std::vector<EdgeId> colorable_;
  std::vector<std::vector<EdgeId>> surround_;
  std::vector<std::vector<MoveId>> moves_at_;
};

}  // namespace crosspatch
