#include "crosspatch/tour_search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "crosspatch/errors.hpp"

namespace crosspatch {
namespace {

// Follows a graph of maximum degree 2 from `start`; returns the visited
// squares in order (a closed walk stops before repeating `start`).
std::vector<Square> trace(const Board& board, const CrosspatchGraph& g, Square start) {
  std::vector<std::vector<Square>> adj(static_cast<std::size_t>(board.square_slots()));
  for (const KnightMove& mv : g.moves) {
    adj[static_cast<std::size_t>(board.square_id(mv.from))].push_back(mv.to);
    adj[static_cast<std::size_t>(board.square_id(mv.to))].push_back(mv.from);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  std::vector<Square> out{start};
  std::optional<Square> prev;
  Square cur = start;
  while (true) {
    const auto& nb = adj[static_cast<std::size_t>(board.square_id(cur))];
    std::optional<Square> next;
    for (const Square& s : nb)
      if (!prev || s != *prev) {
        next = s;
        break;
      }
    if (!next || *next == start) break;
    prev = cur;
    cur = *next;
    out.push_back(cur);
    if (out.size() > board.squares().size()) break;
  }
  return out;
}

}  // namespace

const char* tour_kind_name(TourKind kind) noexcept { return kind == TourKind::Closed ? "closed" : "open"; }

TourResult search_closed_tour(const TourQuery& query) {
  if (query.kind != TourKind::Closed) throw std::invalid_argument("closed-tour search needs kind = closed");
  if (query.budget == 0) throw std::invalid_argument("tour search budget must be positive");
  const CrossTable table(query.board);
  const Board& board = table.board();
  TourResult result;
  EnumerationOptions options;
  options.limits.node_budget = query.budget;
  try {
    const SearchSummary summary = enumerate_pseudotours(table, options, [&](const RedSet& reds) {
      ++result.candidates;
      const CrosspatchGraph g = realize_graph(table, reds);
      const CycleDecomposition cycles = cycle_decomposition(board, g);
      if (cycles.count() != 1) return true;
      TourWitness w;
      w.kind = TourKind::Closed;
      w.sequence = cycles.cycles.front();
      w.reds = reds;
      w.cycle_count = 1;
      result.witness = std::move(w);
      return false;
    });
    result.nodes = summary.nodes;
  } catch (const BudgetExhausted& ex) {
    result.nodes = ex.nodes();
    result.status = SearchStatus::Inconclusive;
    return result;
  }
  result.status = result.witness ? SearchStatus::Found : SearchStatus::None;
  return result;
}

TourResult search_open_tour(const TourQuery& query) {
  if (query.kind != TourKind::Open) throw std::invalid_argument("open-tour search needs kind = open");
  if (query.budget == 0) throw std::invalid_argument("tour search budget must be positive");
  const CrossTable table(query.board);
  const Board& board = table.board();
  const auto& squares = board.squares();
  const bool rectangle = board.topology() == Topology::Rectangle;

  std::vector<int> base(static_cast<std::size_t>(board.square_slots()), -1);
  for (const Square& s : squares) base[static_cast<std::size_t>(board.square_id(s))] = 2;

  TourResult result;
  for (std::size_t p = 0; p < squares.size() && !result.witness; ++p) {
    for (std::size_t q = p + 1; q < squares.size() && !result.witness; ++q) {
      const Square first = squares[p];
      const Square second = squares[q];
      std::vector<int> targets = base;
      targets[static_cast<std::size_t>(board.square_id(first))] = 1;
      targets[static_cast<std::size_t>(board.square_id(second))] = 1;

      SearchLimits limits;
      limits.node_budget = query.budget - result.nodes;
      try {
        const SearchSummary summary = enumerate_exact_degree(table, targets, limits, [&](const RedSet& reds) {
          ++result.candidates;
          if (rectangle) {
            // Both certificates equal the same H-degree parity, yet one quadrant
            // holds a single endpoint and the other none.
            const auto obstruction = find_quadrant_obstruction(board, first, second);
            if (!obstruction) throw ConsistencyError("no quadrant obstruction for distinct endpoints");
            const auto odd = quadrant_parity_certificate(table, reds, obstruction->vertex, obstruction->odd_quadrant);
            const auto even = quadrant_parity_certificate(table, reds, obstruction->vertex, obstruction->empty_quadrant);
            if (odd.lhs != 1 || even.lhs != 0 || !odd.consistent() || !even.consistent())
              throw ConsistencyError("open crosspatch candidate escapes the quadrant parity argument");
            throw ConsistencyError("open crosspatch candidate on a rectangle contradicts quadrant parity");
          }
          const CrosspatchGraph g = realize_graph(table, reds);
          std::vector<Square> path = trace(board, g, first);
          if (path.size() != squares.size() || path.back() != second) return true;
          TourWitness w;
          w.kind = TourKind::Open;
          w.sequence = std::move(path);
          w.reds = reds;
          w.cycle_count = 0;
          w.endpoints = std::make_pair(first, second);
          result.witness = std::move(w);
          return false;
        });
        result.nodes += summary.nodes;
      } catch (const BudgetExhausted& ex) {
        result.nodes += ex.nodes();
        result.status = SearchStatus::Inconclusive;
        return result;
      }
      if (result.nodes >= query.budget && !result.witness) {
        result.status = SearchStatus::Inconclusive;
        return result;
      }
    }
  }
  result.status = result.witness ? SearchStatus::Found : SearchStatus::None;
  return result;
}

std::string check_witness(const Board& board, const TourWitness& w) {
  const CrossTable table(board);
  for (const EdgeId e : w.reds.edges)
    if (e < 0 || e >= board.edge_count() || !table.colorable(e)) return "red edge without a cross pair";
  const CrosspatchGraph g = realize_graph(table, w.reds);

  std::map<EdgeId, int> per_edge;
  for (const KnightMove& mv : g.moves) ++per_edge[board.edge_id(move_to_edge(board, mv))];
  for (const auto& [edge, count] : per_edge)
    if (count != 2) return "a move of G is not part of a cross";

  const auto& squares = board.squares();
  if (w.sequence.size() != squares.size()) return "sequence does not visit every square";
  std::set<Square> visited(w.sequence.begin(), w.sequence.end());
  if (visited.size() != squares.size()) return "sequence repeats a square";

  const std::size_t links = w.kind == TourKind::Closed ? w.sequence.size() : w.sequence.size() - 1;
  if (g.moves.size() != links) return "G has moves outside the tour";
  std::set<KnightMove> moves(g.moves.begin(), g.moves.end());
  for (std::size_t k = 0; k < links; ++k) {
    const Square a = w.sequence[k];
    const Square b = w.sequence[(k + 1) % w.sequence.size()];
    if (!moves.count(make_move(a, b))) return "consecutive squares are not joined in G";
  }

  for (const Square& s : squares) {
    const int deg = g.degree[static_cast<std::size_t>(board.square_id(s))];
    const bool end = w.kind == TourKind::Open && (s == w.sequence.front() || s == w.sequence.back());
    if (deg != (end ? 1 : 2)) return "degree profile is wrong";
  }
  if (w.kind == TourKind::Open) {
    if (!w.endpoints) return "open tour without endpoints";
    const std::set<Square> ends{w.endpoints->first, w.endpoints->second};
    if (ends != std::set<Square>{w.sequence.front(), w.sequence.back()}) return "endpoints do not match";
  } else if (w.cycle_count != 1 || cycle_decomposition(board, g).count() != 1) {
    return "closed tour is not a single cycle";
  }
  return {};
}

CounterexampleResult find_odd_degree_counterexample(Topology topology, int max_size) {
  if (topology != Topology::CylinderX && topology != Topology::CylinderY && topology != Topology::Torus)
    throw UnsupportedTopology("odd H-degrees are impossible on rectangles; pick a wrapped topology");
  if (max_size < 5) throw std::invalid_argument("wrapped boards need max_size >= 5");

  const int min_m = topology == Topology::CylinderY ? 1 : 5;
  const int min_n = topology == Topology::CylinderX ? 1 : 5;
  std::vector<std::pair<int, int>> sizes;
  for (int m = min_m; m <= max_size; ++m)
    for (int n = min_n; n <= max_size; ++n) sizes.emplace_back(m, n);
  std::stable_sort(sizes.begin(), sizes.end(), [](const auto& l, const auto& r) {
    return l.first * l.second < r.first * r.second;
  });

  CounterexampleResult result;
  for (const auto& [m, n] : sizes) {
    const CrossTable table(Board(topology, m, n));
    const Board& board = table.board();
    result.searched.push_back(board);
    const SearchSummary summary = enumerate_pseudotours(table, {}, [&](const RedSet& reds) {
      const CrossGraphH h = build_h(board, reds);
      for (VertexId id = 0; id < board.vertex_count(); ++id) {
        if (h.degree[static_cast<std::size_t>(id)] % 2 != 0) {
          result.witness = OddDegreeCounterexample{board, reds, board.vertex_at(id)};
          return false;
        }
      }
      return true;
    });
    result.nodes += summary.nodes;
    if (result.witness) break;
  }
  return result;
}

}  // namespace crosspatch
