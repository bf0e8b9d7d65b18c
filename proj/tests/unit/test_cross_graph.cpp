#include <doctest.h>

#include <algorithm>
#include <random>

#include "crosspatch/cross_graph.hpp"
#include "crosspatch/errors.hpp"
#include "crosspatch/tour_search.hpp"
#include "oracles.hpp"

using namespace crosspatch;

namespace {

BoardEdge vertical(int a, int b) { return {{a, b}, EdgeDir::N}; }
BoardEdge horizontal(int a, int b) { return {{a, b}, EdgeDir::E}; }

RedSet center_ring(const Board& b) {
  return make_red_set(b, {vertical(1, 1), vertical(1, 2), vertical(3, 1), vertical(3, 2), horizontal(1, 1),
                          horizontal(2, 1), horizontal(1, 3), horizontal(2, 3)});
}

CornerPermutation perm(Corner a, Corner b, Corner c, Corner d) { return CornerPermutation({a, b, c, d}); }

}  // namespace

TEST_CASE("H of the 4x4 pseudotour is the center ring") {
  const Board b = Board::rectangle(4, 4);
  const CrossGraphH h = build_h(b, center_ring(b));
  int on_ring = 0;
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    const BoardVertex x = b.vertex_at(v);
    const bool ring = x.a >= 1 && x.a <= 3 && x.b >= 1 && x.b <= 3 && !(x.a == 2 && x.b == 2);
    CHECK(h.degree[static_cast<std::size_t>(v)] == (ring ? 2 : 0));
    on_ring += ring ? 1 : 0;
  }
  CHECK(on_ring == 8);
  const auto report = verify_h_degrees(b, h);
  CHECK(report.pass());
  CHECK(report.histogram.at(2) == 8);

  const auto cycles = decompose_and_orient(b, h);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].length() == 8);
  CHECK(cycles[0].vertices.front() == BoardVertex{1, 1});
}

TEST_CASE("degenerate H") {
  const Board b = Board::rectangle(4, 4);
  const CrossGraphH empty = build_h(b, {});
  CHECK(std::all_of(empty.degree.begin(), empty.degree.end(), [](int d) { return d == 0; }));
  CHECK(decompose_and_orient(b, empty).empty());

  const CrossGraphH single = build_h(b, make_red_set(b, {vertical(2, 1)}));
  CHECK(std::count(single.degree.begin(), single.degree.end(), 1) == 2);
  const auto report = verify_h_degrees(b, single);
  CHECK_FALSE(report.all_even);
  CHECK(report.witness == BoardVertex{2, 1});
  try {
    decompose_and_orient(b, single);
    FAIL("expected a structure error");
  } catch (const StructureError& ex) {
    CHECK(ex.vertex_a() == 2);
    CHECK(ex.vertex_b() == 1);
  }

  const CrossGraphH star =
      build_h(b, make_red_set(b, {vertical(2, 1), vertical(2, 2), horizontal(1, 2), horizontal(2, 2)}));
  CHECK_THROWS_AS(decompose_and_orient(b, star), StructureError);
}

TEST_CASE("step permutations") {
  using C = Corner;
  CHECK(step_permutation(Step::E) == perm(C::C, C::A, C::D, C::B));
  CHECK(step_permutation(Step::N) == perm(C::C, C::D, C::B, C::A));
  CHECK(step_permutation(Step::W) == step_permutation(Step::E).inverse());
  CHECK(step_permutation(Step::S) == step_permutation(Step::N).inverse());
  for (Step s : {Step::N, Step::E, Step::S, Step::W}) {
    CHECK(step_permutation(s).is_odd());
    CHECK(step_permutation(s).then(step_permutation(opposite(s))) == CornerPermutation::identity());
  }
  CHECK(step_permutation(Step::E).to_string() == "A->C B->A C->D D->B");
  CHECK(step_permutation(Step::E).cycle_count() == 1);
  CHECK(CornerPermutation::identity().cycle_count() == 4);
  CHECK_FALSE(CornerPermutation::identity().is_odd());
  CHECK_THROWS(CornerPermutation({C::A, C::A, C::B, C::C}));
}

TEST_CASE("sigma along the 4x4 ring") {
  const Board b = Board::rectangle(4, 4);
  const RedSet reds = center_ring(b);
  const CrosspatchGraph g = realize_graph(CrossTable(b), reds);
  const auto cycles = decompose_and_orient(b, build_h(b, reds));
  const SigmaWalk full = walk_sigma(b, cycles[0], g);
  CHECK(full.sigma == CornerPermutation::identity());
  CHECK(full.sigma.cycle_count() == 4);
  CHECK(full.length == 8);

  for (int k = 0; k <= 8; ++k) {
    const SigmaWalk prefix = walk_sigma(b, cycles[0], g, k);
    CHECK(prefix.sigma.is_odd() == (k % 2 == 1));
    if (k == 1) CHECK(prefix.sigma == step_permutation(cycles[0].steps[0]));
  }
}

TEST_CASE("every single-step prefix on larger boards reproduces the step table") {
  for (const Board& b : {Board::rectangle(8, 8), Board::rectangle(6, 8)}) {
    const CrossTable table(b);
    for (const RedSet& reds : all_pseudotours(table)) {
      const CrosspatchGraph g = realize_graph(table, reds);
      for (const auto& cycle : decompose_and_orient(b, build_h(b, reds))) {
        CHECK(walk_sigma(b, cycle, g, 1).sigma == step_permutation(cycle.steps[0]));
        const SigmaWalk full = walk_sigma(b, cycle, g);
        CHECK_FALSE(full.sigma.is_odd());
        CHECK(full.length % 2 == 0);
      }
    }
  }
}

TEST_CASE("braid correspondence on rectangles") {
  for (const Board& b : {Board::rectangle(4, 4), Board::rectangle(4, 8), Board::rectangle(8, 8)}) {
    const CrossTable table(b);
    for (const RedSet& reds : all_pseudotours(table)) {
      const BraidReport report = braid_correspondence(b, realize_graph(table, reds), build_h(b, reds));
      CHECK(report.pass());
      CHECK(report.failure.empty());
      CHECK(report.g_cycles % 2 == 0);
      for (std::size_t k = 0; k < report.g_cycles_per_h.size(); ++k)
        CHECK(report.g_cycles_per_h[k] == report.sigma_cycles_per_h[k]);
    }
  }
}

TEST_CASE("two disjoint rings on 4x8") {
  const Board b = Board::rectangle(4, 8);
  bool seen = false;
  for (const RedSet& reds : all_pseudotours(CrossTable(b))) {
    const auto cycles = decompose_and_orient(b, build_h(b, reds));
    if (cycles.size() == 2) {
      seen = true;
      for (const auto& c : cycles) CHECK(c.length() % 2 == 0);
    }
  }
  CHECK(seen);
}

TEST_CASE("quadrant parity certificate") {
  const Board b = Board::rectangle(4, 4);
  const CrossTable table(b);
  const RedSet ring = center_ring(b);
  for (VertexId v = 0; v < b.vertex_count(); ++v)
    for (int q = 1; q <= 4; ++q) {
      const QuadrantParity p = quadrant_parity_certificate(table, ring, b.vertex_at(v), q);
      CHECK(p.lhs == 0);
      CHECK(p.rhs == 0);
    }

  // One cross on vertical (1,1)-(1,2): squares (1,1),(1,3),(2,1),(2,3); only
  // (1,1) lies in quadrant 1 of u = (1, 1).
  const RedSet one = make_red_set(b, {vertical(1, 1)});
  const QuadrantParity p = quadrant_parity_certificate(table, one, {1, 1});
  CHECK(p.lhs == 1);
  CHECK(p.rhs == 1);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const QuadrantParity origin = quadrant_parity_certificate(table, oracle::random_red_set(table, rng), {0, 0});
    CHECK(origin.lhs == 0);
    CHECK(origin.rhs == 0);
  }
  CHECK_THROWS_AS(quadrant_parity_certificate(CrossTable(Board::torus(5, 5)), {}, {1, 1}), UnsupportedTopology);
}

TEST_CASE("quadrant obstruction exists for every endpoint pair of a small rectangle") {
  for (const Board& b : {Board::rectangle(4, 4), Board::rectangle(5, 6)}) {
    const auto& squares = b.squares();
    for (std::size_t x = 0; x < squares.size(); ++x)
      for (std::size_t y = x + 1; y < squares.size(); ++y) {
        const auto obstruction = find_quadrant_obstruction(b, squares[x], squares[y]);
        REQUIRE(obstruction);
        const auto odd = quadrant(b, obstruction->vertex, obstruction->odd_quadrant);
        const auto empty = quadrant(b, obstruction->vertex, obstruction->empty_quadrant);
        const auto holds = [](const std::vector<Square>& q, Square s) {
          return std::find(q.begin(), q.end(), s) != q.end();
        };
        CHECK(holds(odd, squares[x]) != holds(odd, squares[y]));
        CHECK_FALSE(holds(empty, squares[x]));
        CHECK_FALSE(holds(empty, squares[y]));
      }
  }
}

TEST_CASE("verify_pseudotour on rectangles and wrapped boards") {
  const Board b = Board::rectangle(8, 8);
  const CrossTable table(b);
  for (const RedSet& reds : all_pseudotours(table)) CHECK(verify_pseudotour(table, reds).pass());

  const auto found = find_odd_degree_counterexample(Topology::Torus, 6);
  REQUIRE(found.witness);
  const CrossTable torus(found.witness->board);
  const PseudotourReport report = verify_pseudotour(torus, found.witness->reds);
  CHECK(report.cross_closed);
  CHECK(report.pseudotour);
  CHECK_FALSE(report.even_degrees);
  CHECK_FALSE(report.pass());
  CHECK(report.odd_vertex == found.witness->vertex);
  const auto degrees = verify_h_degrees(found.witness->board, build_h(found.witness->board, found.witness->reds));
  CHECK_FALSE(degrees.all_even);
}
