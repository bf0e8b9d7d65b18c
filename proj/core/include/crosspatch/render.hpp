#pragma once

#include <string>

#include "crosspatch/tour_search.hpp"

namespace crosspatch {

struct SvgOptions {
  int unit = 24;  // pixels per half square
};

// Board lattice, red edges of H, the knight graph G between square centers,
// and a dot at every cross. Throws ValidationError for red edges without a
// cross pair or a witness that does not re-verify.
std::string render_svg(const Board& board, const RedSet& reds, const SvgOptions& options = {},
                       const TourWitness* witness = nullptr);

// H only: '+' marks vertices of H, '-' and '|' red edges, '#' removed squares.
std::string render_ascii(const Board& board, const RedSet& reds);

}  // namespace crosspatch
