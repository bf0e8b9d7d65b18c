#pragma once

// Exhaustive searches for crosspatch tours and for boards on which H can have
// a vertex of odd degree. "None" is only reported after the full constraint
// system has been exhausted, so it is a proof at that board size.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "crosspatch/cross_graph.hpp"

namespace crosspatch {

enum class TourKind { Closed, Open };

struct TourQuery {
  Board board;
  TourKind kind = TourKind::Closed;
  std::uint64_t budget = 50'000'000;  // search nodes
};

struct TourWitness {
  TourKind kind = TourKind::Closed;
  std::vector<Square> sequence;  // closed: cycle order; open: path order
  RedSet reds;
  std::size_t cycle_count = 0;
  std::optional<std::pair<Square, Square>> endpoints;
};

enum class SearchStatus { Found, None, Inconclusive };

struct TourResult {
  SearchStatus status = SearchStatus::None;
  std::optional<TourWitness> witness;
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;  // red sets meeting the degree profile
};

TourResult search_closed_tour(const TourQuery& query);
TourResult search_open_tour(const TourQuery& query);

// Independent re-check of a witness: cross-closure, degree profile,
// Hamiltonicity and connectivity. Returns an empty string when it holds.
std::string check_witness(const Board& board, const TourWitness& witness);

struct OddDegreeCounterexample {
  Board board;
  RedSet reds;
  BoardVertex vertex;
};

struct CounterexampleResult {
  std::optional<OddDegreeCounterexample> witness;
  std::vector<Board> searched;
  std::uint64_t nodes = 0;
};

// Smallest board of `topology` (by area, then (m, n)) with both sides in
// [1, max_size] (wrapped sides at least 5) that carries a pseudotour whose H
// has an odd-degree vertex; the first such pseudotour in canonical order.
CounterexampleResult find_odd_degree_counterexample(Topology topology, int max_size);

const char* tour_kind_name(TourKind kind) noexcept;

}  // namespace crosspatch
