#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "crosspatch/knight_cross.hpp"

namespace crosspatch {

// Edge set of H; generator of the crosspatch graph G. Ids sorted ascending.
struct RedSet {
  std::vector<EdgeId> edges;
  friend bool operator==(const RedSet&, const RedSet&) = default;
  friend auto operator<=>(const RedSet&, const RedSet&) = default;
};

RedSet make_red_set(const Board& board, const std::vector<BoardEdge>& edges);
std::vector<BoardEdge> red_edges(const Board& board, const RedSet& reds);

struct CrosspatchGraph {
  std::vector<KnightMove> moves;  // sorted
  std::vector<int> degree;        // indexed by square slot

  bool empty() const noexcept { return moves.empty(); }
};

// Union of both moves of every red edge's cross pair.
CrosspatchGraph realize_graph(const CrossTable& table, const RedSet& reds);

struct CycleDecomposition {
  std::vector<std::vector<Square>> cycles;
  std::size_t count() const noexcept { return cycles.size(); }
};

// Splits a graph whose degrees are all 0 or 2 into simple cycles. Each cycle
// starts at its lowest square and proceeds to the lower of its two neighbours.
CycleDecomposition cycle_decomposition(const Board& board, const CrosspatchGraph& g);

bool is_pseudotour(const Board& board, const CrosspatchGraph& g);

// Receives each solution; returning false stops the search.
using RedSetSink = std::function<bool(const RedSet&)>;

struct SearchLimits {
  std::uint64_t node_budget = 0;  // 0 = unlimited
  // Decision prefix ('1' = red, '0' = not red) of the first node to explore.
  std::string resume_cursor;
  unsigned threads = 1;
};

struct SearchSummary {
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;
  bool stopped = false;
};

// Enumerates red sets in which every square slot s with targets[s] >= 0 sees
// exactly targets[s] red colorable surround8 edges. Solutions arrive in
// ascending lexicographic order of their sorted id lists. Throws
// BudgetExhausted when the node budget runs out.
SearchSummary enumerate_exact_degree(const CrossTable& table, const std::vector<int>& targets,
                                     const SearchLimits& limits, const RedSetSink& sink);

struct EnumerationOptions {
  bool symmetry_reduction = false;
  SearchLimits limits;
};

SearchSummary enumerate_pseudotours(const CrossTable& table, const EnumerationOptions& options,
                                    const RedSetSink& sink);

std::vector<RedSet> all_pseudotours(const CrossTable& table);

// CROSSPATCH_THREADS if set, else 1.
unsigned default_thread_count();

}  // namespace crosspatch
