#include "crosspatch/symmetry.hpp"

#include <algorithm>

#include "crosspatch/errors.hpp"

namespace crosspatch {

Point BoardSymmetry::apply(const Board& board, Point p) const noexcept {
  if (transpose) std::swap(p.x, p.y);
  if (flip_x) p.x = 2 * board.width() - p.x;
  if (flip_y) p.y = 2 * board.height() - p.y;
  p.x += 2 * shift_x;
  p.y += 2 * shift_y;
  return board.wrap(p);
}

std::vector<BoardSymmetry> symmetry_group(const Board& board) {
  const bool square = board.width() == board.height();
  const bool can_transpose = square && board.topology() != Topology::CylinderX &&
                             board.topology() != Topology::CylinderY;
  const int shifts_x = board.wraps_x() ? board.width() : 1;
  const int shifts_y = board.wraps_y() ? board.height() : 1;

  std::vector<BoardSymmetry> group;
  for (int t = 0; t <= (can_transpose ? 1 : 0); ++t)
    for (int fx = 0; fx <= 1; ++fx)
      for (int fy = 0; fy <= 1; ++fy)
        for (int sx = 0; sx < shifts_x; ++sx)
          for (int sy = 0; sy < shifts_y; ++sy) {
            const BoardSymmetry g{t == 1, fx == 1, fy == 1, sx, sy};
            const bool keeps_holes = std::all_of(
                board.removed().begin(), board.removed().end(), [&](const Square& s) {
                  const Point c = g.apply(board, Board::center(s));
                  const Square image{(c.x + 1) / 2, (c.y + 1) / 2};
                  return std::binary_search(board.removed().begin(), board.removed().end(), image);
                });
            if (keeps_holes) group.push_back(g);
          }
  return group;
}

RedSet transform(const Board& board, const BoardSymmetry& g, const RedSet& reds) {
  RedSet out;
  out.edges.reserve(reds.edges.size());
  for (const EdgeId id : reds.edges) {
    const auto image = board.edge_at_midpoint(g.apply(board, Board::midpoint(board.edge_at(id))));
    if (!image) throw ConsistencyError("symmetry maps a board edge off the board");
    out.edges.push_back(board.edge_id(*image));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

RedSet canonical_form(const Board& board, const std::vector<BoardSymmetry>& group, const RedSet& reds) {
  RedSet best = reds;
  for (const BoardSymmetry& g : group) {
    RedSet image = transform(board, g, reds);
    if (image.edges < best.edges) best = std::move(image);
  }
  return best;
}

bool is_orbit_representative(const Board& board, const std::vector<BoardSymmetry>& group,
                             const RedSet& reds) {
  for (const BoardSymmetry& g : group)
    if (transform(board, g, reds).edges < reds.edges) return false;
  return true;
}

}  // namespace crosspatch
