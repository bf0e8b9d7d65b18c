#include <doctest.h>

#include "crosspatch/errors.hpp"
#include "crosspatch/tour_search.hpp"

using namespace crosspatch;

namespace {

TourResult closed(const Board& b, std::uint64_t budget = 50'000'000) {
  return search_closed_tour({b, TourKind::Closed, budget});
}

TourResult open(const Board& b, std::uint64_t budget = 50'000'000) {
  return search_open_tour({b, TourKind::Open, budget});
}

}  // namespace

TEST_CASE("closed tour on the eight-square ring") {
  const TourResult r = closed(Board::ring3());
  REQUIRE(r.status == SearchStatus::Found);
  REQUIRE(r.witness);
  CHECK(r.witness->sequence.size() == 8);
  CHECK(r.witness->cycle_count == 1);
  CHECK(r.witness->reds.edges.size() == 4);
  CHECK(check_witness(Board::ring3(), *r.witness).empty());
}

TEST_CASE("no closed tours on small rectangles") {
  for (int m = 3; m <= 5; ++m)
    for (int n = 3; n <= 5; ++n) CHECK(closed(Board::rectangle(m, n)).status == SearchStatus::None);
  const TourResult r = closed(Board::rectangle(4, 4));
  CHECK(r.status == SearchStatus::None);
  CHECK(r.candidates == 1);
}

TEST_CASE("no open tours on small boards") {
  CHECK(open(Board::rectangle(2, 3)).status == SearchStatus::None);
  CHECK(open(Board::rectangle(4, 4)).status == SearchStatus::None);
  CHECK(open(Board::ring3()).status == SearchStatus::None);
}

TEST_CASE("a tiny budget is inconclusive, never none") {
  CHECK(closed(Board::rectangle(8, 8), 5).status == SearchStatus::Inconclusive);
  CHECK(open(Board::rectangle(6, 6), 5).status == SearchStatus::Inconclusive);
}

TEST_CASE("check_witness rejects tampered witnesses") {
  const TourResult r = closed(Board::ring3());
  REQUIRE(r.witness);
  TourWitness bad = *r.witness;
  std::swap(bad.sequence[1], bad.sequence[2]);
  CHECK_FALSE(check_witness(Board::ring3(), bad).empty());

  bad = *r.witness;
  bad.reds.edges.pop_back();
  CHECK_FALSE(check_witness(Board::ring3(), bad).empty());

  bad = *r.witness;
  bad.kind = TourKind::Open;
  CHECK_FALSE(check_witness(Board::ring3(), bad).empty());
}

TEST_CASE("odd H-degree counterexamples on wrapped boards") {
  const auto torus = find_odd_degree_counterexample(Topology::Torus, 8);
  REQUIRE(torus.witness);
  CHECK(torus.witness->board == Board::torus(5, 6));
  CHECK(torus.searched.front() == Board::torus(5, 5));
  CHECK(torus.searched.back() == torus.witness->board);

  const auto cx = find_odd_degree_counterexample(Topology::CylinderX, 8);
  REQUIRE(cx.witness);
  CHECK(cx.witness->board.topology() == Topology::CylinderX);
  const auto cy = find_odd_degree_counterexample(Topology::CylinderY, 8);
  REQUIRE(cy.witness);
  CHECK(cy.witness->board.topology() == Topology::CylinderY);

  for (const auto* found : {&torus, &cx, &cy}) {
    const auto& w = *found->witness;
    const CrossTable table(w.board);
    CHECK(is_pseudotour(w.board, realize_graph(table, w.reds)));
    const auto h = build_h(w.board, w.reds);
    CHECK(h.degree[static_cast<std::size_t>(w.board.vertex_id(w.vertex))] % 2 == 1);
  }

  CHECK_THROWS_AS(find_odd_degree_counterexample(Topology::Rectangle, 8), UnsupportedTopology);
  CHECK_THROWS_AS(find_odd_degree_counterexample(Topology::Torus, 4), std::invalid_argument);
  CHECK_FALSE(find_odd_degree_counterexample(Topology::Torus, 5).witness);
}
