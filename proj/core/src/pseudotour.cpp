#include "crosspatch/pseudotour.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "crosspatch/errors.hpp"
#include "crosspatch/symmetry.hpp"
#include "degree_search.hpp"

namespace crosspatch {

RedSet make_red_set(const Board& board, const std::vector<BoardEdge>& edges) {
  RedSet reds;
  reds.edges.reserve(edges.size());
  for (const BoardEdge& e : edges) reds.edges.push_back(board.edge_id(e));
  std::sort(reds.edges.begin(), reds.edges.end());
  reds.edges.erase(std::unique(reds.edges.begin(), reds.edges.end()), reds.edges.end());
  return reds;
}

std::vector<BoardEdge> red_edges(const Board& board, const RedSet& reds) {
  std::vector<BoardEdge> out;
  out.reserve(reds.edges.size());
  for (const EdgeId id : reds.edges) out.push_back(board.edge_at(id));
  return out;
}

CrosspatchGraph realize_graph(const CrossTable& table, const RedSet& reds) {
  const Board& board = table.board();
  CrosspatchGraph g;
  g.degree.assign(static_cast<std::size_t>(board.square_slots()), 0);
  for (const EdgeId e : reds.edges) {
    if (e < 0 || e >= board.edge_count() || !table.colorable(e))
      throw DomainError("red edge has no cross pair on this board");
    for (const MoveId id : table.moves_of(e)) {
      const KnightMove& mv = table.move(id);
      g.moves.push_back(mv);
      ++g.degree[static_cast<std::size_t>(board.square_id(mv.from))];
      ++g.degree[static_cast<std::size_t>(board.square_id(mv.to))];
    }
  }
  std::sort(g.moves.begin(), g.moves.end());
  if (std::adjacent_find(g.moves.begin(), g.moves.end()) != g.moves.end())
    throw DomainError("red set lists an edge twice");
  return g;
}

bool is_pseudotour(const Board& board, const CrosspatchGraph& g) {
  for (const Square& s : board.squares())
    if (g.degree[static_cast<std::size_t>(board.square_id(s))] != 2) return false;
  return true;
}

CycleDecomposition cycle_decomposition(const Board& board, const CrosspatchGraph& g) {
  const auto slots = static_cast<std::size_t>(board.square_slots());
  std::vector<std::vector<SquareId>> adj(slots);
  for (const KnightMove& mv : g.moves) {
    const SquareId a = board.square_id(mv.from);
    const SquareId b = board.square_id(mv.to);
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (std::size_t s = 0; s < slots; ++s) {
    if (adj[s].size() != 0 && adj[s].size() != 2) {
      const Square sq = board.square_at(static_cast<SquareId>(s));
      throw NotAPseudotour("square (" + std::to_string(sq.i) + "," + std::to_string(sq.j) +
                           ") has degree " + std::to_string(adj[s].size()));
    }
    std::sort(adj[s].begin(), adj[s].end());
  }

  CycleDecomposition out;
  std::vector<char> seen(slots, 0);
  for (std::size_t start = 0; start < slots; ++start) {
    if (seen[start] || adj[start].empty()) continue;
    std::vector<Square> cycle;
    auto prev = static_cast<SquareId>(start);
    SquareId cur = adj[start][0];
    seen[start] = 1;
    cycle.push_back(board.square_at(prev));
    while (cur != static_cast<SquareId>(start)) {
      seen[static_cast<std::size_t>(cur)] = 1;
      cycle.push_back(board.square_at(cur));
      const auto& nb = adj[static_cast<std::size_t>(cur)];
      const SquareId next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

namespace {

constexpr int kSplitDepth = 10;

SearchSummary enumerate_parallel(const CrossTable& table, const std::vector<int>& targets,
                                 unsigned threads, const RedSetSink& sink) {
  detail::DegreeSearch splitter(table, targets);
  const std::vector<std::string> tasks = splitter.collect(kSplitDepth);

  struct Slot {
    std::vector<RedSet> results;
    std::uint64_t nodes = 0;
    bool done = false;
  };
  std::vector<Slot> slots(tasks.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;

  const auto worker = [&] {
    try {
      detail::DegreeSearch search(table, targets);
      for (std::size_t k = next++; k < tasks.size() && !stop; k = next++) {
        std::vector<RedSet> found;
        search.run_subtree(tasks[k], [&](const RedSet& r) {
          found.push_back(r);
          return !stop.load();
        });
        std::lock_guard lock(mu);
        slots[k].results = std::move(found);
        slots[k].nodes = search.nodes();
        slots[k].done = true;
        ready.notify_all();
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      stop = true;
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

  SearchSummary summary{splitter.nodes(), 0, false};
  for (std::size_t k = 0; k < tasks.size() && !stop; ++k) {
    std::vector<RedSet> batch;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[k].done || stop.load(); });
      if (!slots[k].done) break;
      batch = std::move(slots[k].results);
      summary.nodes += slots[k].nodes;
    }
    for (const RedSet& r : batch) {
      ++summary.emitted;
      if (!sink(r)) {
        summary.stopped = true;
        stop = true;
        break;
      }
    }
  }
  stop = true;
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

}  // namespace

SearchSummary enumerate_exact_degree(const CrossTable& table, const std::vector<int>& targets,
                                     const SearchLimits& limits, const RedSetSink& sink) {
  if (limits.threads > 1 && limits.node_budget == 0 && limits.resume_cursor.empty())
    return enumerate_parallel(table, targets, limits.threads, sink);
  detail::DegreeSearch search(table, targets);
  search.run_from(limits.resume_cursor, limits.node_budget, sink);
  return {search.nodes(), search.emitted(), search.stopped()};
}

SearchSummary enumerate_pseudotours(const CrossTable& table, const EnumerationOptions& options,
                                    const RedSetSink& sink) {
  const Board& board = table.board();
  std::vector<int> targets(static_cast<std::size_t>(board.square_slots()), -1);
  for (const Square& s : board.squares()) targets[static_cast<std::size_t>(board.square_id(s))] = 2;
  if (!options.symmetry_reduction) return enumerate_exact_degree(table, targets, options.limits, sink);

  const auto group = symmetry_group(board);
  std::uint64_t kept = 0;
  SearchSummary summary = enumerate_exact_degree(table, targets, options.limits, [&](const RedSet& r) {
    if (!is_orbit_representative(board, group, r)) return true;
    ++kept;
    return sink(r);
  });
  summary.emitted = kept;
  return summary;
}

std::vector<RedSet> all_pseudotours(const CrossTable& table) {
  std::vector<RedSet> out;
  enumerate_pseudotours(table, {}, [&](const RedSet& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("CROSSPATCH_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return 1;
}

}  // namespace crosspatch
