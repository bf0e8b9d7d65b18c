#pragma once

// Board symmetries acting on doubled coordinates: the dihedral symmetries of
// the rectangle, plus translations along wrapped axes.

#include <vector>

#include "crosspatch/pseudotour.hpp"

namespace crosspatch {

struct BoardSymmetry {
  bool transpose = false;
  bool flip_x = false;
  bool flip_y = false;
  int shift_x = 0;  // in squares; nonzero only on wrapped axes
  int shift_y = 0;

  Point apply(const Board& board, Point p) const noexcept;
};

// Every symmetry of `board` (identity first). Subset boards keep only the
// symmetries that map the removed squares onto themselves.
std::vector<BoardSymmetry> symmetry_group(const Board& board);

RedSet transform(const Board& board, const BoardSymmetry& g, const RedSet& reds);

// Lexicographically least image of `reds` under the group.
RedSet canonical_form(const Board& board, const std::vector<BoardSymmetry>& group, const RedSet& reds);
bool is_orbit_representative(const Board& board, const std::vector<BoardSymmetry>& group,
                             const RedSet& reds);

}  // namespace crosspatch
