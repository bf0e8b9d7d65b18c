#pragma once

#include "crosspatch/board.hpp"
#include "crosspatch/census.hpp"
#include "crosspatch/cross_graph.hpp"
#include "crosspatch/errors.hpp"
#include "crosspatch/json_io.hpp"
#include "crosspatch/knight_cross.hpp"
#include "crosspatch/pseudotour.hpp"
#include "crosspatch/render.hpp"
#include "crosspatch/symmetry.hpp"
#include "crosspatch/tour_search.hpp"
