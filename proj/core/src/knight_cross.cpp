#include "crosspatch/knight_cross.hpp"

#include <algorithm>
#include <cstdlib>

#include "crosspatch/errors.hpp"

namespace crosspatch {
namespace {

constexpr Point kLeaps[8] = {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};

int shortest(int delta, int length) noexcept {
  delta %= length;
  if (delta > length / 2) delta -= length;
  if (delta < -length / 2) delta += length;
  return delta;
}

}  // namespace

KnightMove make_move(Square a, Square b) noexcept {
  return a < b ? KnightMove{a, b} : KnightMove{b, a};
}

Point displacement(const Board& board, Square from, Square to) {
  Point d{to.i - from.i, to.j - from.j};
  if (board.wraps_x()) d.x = shortest(d.x, board.width());
  if (board.wraps_y()) d.y = shortest(d.y, board.height());
  return d;
}

bool is_knight_move(const Board& board, Square a, Square b) {
  if (!board.has_square(a) || !board.has_square(b)) return false;
  const Point d = displacement(board, a, b);
  const int dx = std::abs(d.x), dy = std::abs(d.y);
  return (dx == 1 && dy == 2) || (dx == 2 && dy == 1);
}

std::vector<KnightMove> knight_moves(const Board& board, Square s) {
  const auto from = board.normalize(s);
  if (!from) throw DomainError("square is not on the board");
  std::vector<KnightMove> out;
  for (const Point& leap : kLeaps)
    if (const auto to = board.normalize(Square{from->i + leap.x, from->j + leap.y}))
      out.push_back(make_move(*from, *to));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CrossPair> cross_partner(const Board& board, BoardEdge e) {
  const auto id = board.find_edge(e);
  if (!id) throw DomainError("board edge is not on the board");
  const BoardEdge edge = board.edge_at(*id);
  const auto [a, b] = edge.anchor;
  // Squares of the two crossing moves, as (first end, second end) pairs.
  const std::array<Square, 4> ends =
      edge.dir == EdgeDir::N
          ? std::array<Square, 4>{Square{a, b}, Square{a + 1, b + 2}, Square{a, b + 2}, Square{a + 1, b}}
          : std::array<Square, 4>{Square{a, b}, Square{a + 2, b + 1}, Square{a + 2, b}, Square{a, b + 1}};
  std::array<Square, 4> norm;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto s = board.normalize(ends[k]);
    if (!s) return std::nullopt;
    norm[k] = *s;
  }
  std::array<KnightMove, 2> moves{make_move(norm[0], norm[1]), make_move(norm[2], norm[3])};
  std::sort(moves.begin(), moves.end());
  return CrossPair{edge, moves};
}

BoardEdge move_to_edge(const Board& board, const KnightMove& mv) {
  if (!is_knight_move(board, mv.from, mv.to)) throw DomainError("not a knight move on this board");
  const Point d = displacement(board, mv.from, mv.to);
  const Point c = Board::center(*board.normalize(mv.from));
  const auto edge = board.edge_at_midpoint({c.x + d.x, c.y + d.y});
  if (!edge) throw ConsistencyError("knight move midpoint is not a board edge midpoint");
  return *edge;
}

CrossTable::CrossTable(Board board) : board_(std::move(board)) {
  const int slots = board_.square_slots();
  moves_at_.resize(static_cast<std::size_t>(slots));
  surround_.resize(static_cast<std::size_t>(slots));

  for (const Square& s : board_.squares())
    for (const KnightMove& mv : knight_moves(board_, s))
      if (mv.from == s) moves_.push_back(mv);
  std::sort(moves_.begin(), moves_.end());

  pair_of_.assign(static_cast<std::size_t>(board_.edge_count()), {-1, -1});
  cross_squares_.assign(static_cast<std::size_t>(board_.edge_count()), {-1, -1, -1, -1});
  move_edge_.reserve(moves_.size());
  for (MoveId id = 0; id < move_count(); ++id) {
    const KnightMove& mv = moves_[static_cast<std::size_t>(id)];
    move_edge_.push_back(board_.edge_id(move_to_edge(board_, mv)));
    moves_at_[static_cast<std::size_t>(board_.square_id(mv.from))].push_back(id);
    moves_at_[static_cast<std::size_t>(board_.square_id(mv.to))].push_back(id);
  }

  for (EdgeId e = 0; e < board_.edge_count(); ++e) {
    const auto pair = cross_partner(board_, board_.edge_at(e));
    if (!pair) continue;
    auto& slot = pair_of_[static_cast<std::size_t>(e)];
    for (std::size_t k = 0; k < 2; ++k) {
      const auto id = find_move(pair->moves[k]);
      if (!id || edge_of(*id) != e) throw ConsistencyError("cross pair does not match move midpoints");
      slot[k] = *id;
    }
    const KnightMove& p = pair->moves[0];
    const KnightMove& q = pair->moves[1];
    cross_squares_[static_cast<std::size_t>(e)] = {board_.square_id(p.from), board_.square_id(p.to),
                                                   board_.square_id(q.from), board_.square_id(q.to)};
    colorable_.push_back(e);
  }

  for (const Square& s : board_.squares()) {
    auto& list = surround_[static_cast<std::size_t>(board_.square_id(s))];
    for (const BoardEdge& e : surround8(board_, s)) {
      const EdgeId id = board_.edge_id(e);
      if (colorable(id)) list.push_back(id);
    }
  }
}

std::optional<MoveId> CrossTable::find_move(const KnightMove& mv) const {
  const auto norm_from = board_.normalize(mv.from);
  const auto norm_to = board_.normalize(mv.to);
  if (!norm_from || !norm_to) return std::nullopt;
  const KnightMove key = make_move(*norm_from, *norm_to);
  const auto it = std::lower_bound(moves_.begin(), moves_.end(), key);
  if (it == moves_.end() || *it != key) return std::nullopt;
  return static_cast<MoveId>(it - moves_.begin());
}

}  // namespace crosspatch
