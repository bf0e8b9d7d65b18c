#include "crosspatch/cross_graph.hpp"

#include <algorithm>
#include <set>

#include "crosspatch/errors.hpp"

namespace crosspatch {
namespace {

std::string vertex_text(BoardVertex v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

std::string square_text(Square s) {
  return "(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
}

Step step_along(const Board& board, BoardVertex from, const BoardEdge& e) {
  const bool at_anchor = *board.normalize(e.anchor) == from;
  if (e.dir == EdgeDir::N) return at_anchor ? Step::N : Step::S;
  return at_anchor ? Step::E : Step::W;
}

BoardVertex other_end(const Board& board, BoardVertex from, const BoardEdge& e) {
  const auto [lo, hi] = board.endpoints(e);
  return lo == from ? hi : lo;
}

}  // namespace

CrossGraphH build_h(const Board& board, const RedSet& reds) {
  CrossGraphH h;
  h.incident.resize(static_cast<std::size_t>(board.vertex_count()));
  h.degree.assign(static_cast<std::size_t>(board.vertex_count()), 0);
  for (const EdgeId e : reds.edges) {
    const auto [lo, hi] = board.endpoints(board.edge_at(e));
    for (const BoardVertex v : {lo, hi}) {
      const auto id = static_cast<std::size_t>(board.vertex_id(v));
      h.incident[id].push_back(e);
      ++h.degree[id];
    }
  }
  for (auto& list : h.incident) std::sort(list.begin(), list.end());
  return h;
}

HDegreeReport verify_h_degrees(const Board& board, const CrossGraphH& h) {
  HDegreeReport report;
  std::optional<BoardVertex> first_odd;
  std::optional<BoardVertex> first_bad;
  for (VertexId id = 0; id < board.vertex_count(); ++id) {
    const int deg = h.degree[static_cast<std::size_t>(id)];
    ++report.histogram[deg];
    if (deg % 2 != 0) {
      report.all_even = false;
      if (!first_odd) first_odd = board.vertex_at(id);
    }
    if (deg != 0 && deg != 2) {
      report.zero_or_two = false;
      if (!first_bad) first_bad = board.vertex_at(id);
    }
  }
  report.witness = first_odd ? first_odd : first_bad;
  return report;
}

std::vector<OrientedHCycle> decompose_and_orient(const Board& board, const CrossGraphH& h) {
  for (VertexId id = 0; id < board.vertex_count(); ++id) {
    const int deg = h.degree[static_cast<std::size_t>(id)];
    if (deg != 0 && deg != 2) {
      const BoardVertex v = board.vertex_at(id);
      throw StructureError("board vertex " + vertex_text(v) + " has H-degree " + std::to_string(deg), v.a,
                           v.b);
    }
  }

  std::vector<OrientedHCycle> cycles;
  std::vector<char> seen(static_cast<std::size_t>(board.vertex_count()), 0);
  for (VertexId start = 0; start < board.vertex_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || h.degree[static_cast<std::size_t>(start)] == 0) continue;
    OrientedHCycle cycle;
    BoardVertex v = board.vertex_at(start);
    EdgeId e = h.incident[static_cast<std::size_t>(start)][0];
    do {
      seen[static_cast<std::size_t>(board.vertex_id(v))] = 1;
      const BoardEdge& edge = board.edge_at(e);
      cycle.vertices.push_back(v);
      cycle.steps.push_back(step_along(board, v, edge));
      cycle.edges.push_back(e);
      v = other_end(board, v, edge);
      const auto& at = h.incident[static_cast<std::size_t>(board.vertex_id(v))];
      e = at[0] == e ? at[1] : at[0];
    } while (board.vertex_id(v) != start);

    if (!board.wraps_x() && !board.wraps_y()) {
      int dx = 0, dy = 0;
      for (const Step s : cycle.steps) {
        dx += step_delta(s).x;
        dy += step_delta(s).y;
      }
      if (dx != 0 || dy != 0 || cycle.length() % 2 != 0)
        throw ConsistencyError("H-cycle at " + vertex_text(cycle.vertices[0]) + " is unbalanced");
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

CornerPermutation::CornerPermutation(std::array<Corner, 4> image) : image_(image) {
  std::array<bool, 4> hit{};
  for (const Corner c : image_) hit[static_cast<std::size_t>(c)] = true;
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
    throw std::invalid_argument("corner permutation must be a bijection");
}

CornerPermutation CornerPermutation::then(const CornerPermutation& next) const noexcept {
  CornerPermutation out;
  for (std::size_t r = 0; r < 4; ++r) out.image_[r] = next(image_[r]);
  return out;
}

CornerPermutation CornerPermutation::inverse() const noexcept {
  CornerPermutation out;
  for (std::size_t r = 0; r < 4; ++r) out.image_[static_cast<std::size_t>(image_[r])] = static_cast<Corner>(r);
  return out;
}

int CornerPermutation::cycle_count() const noexcept {
  std::array<bool, 4> seen{};
  int cycles = 0;
  for (std::size_t r = 0; r < 4; ++r) {
    if (seen[r]) continue;
    ++cycles;
    for (std::size_t k = r; !seen[k]; k = static_cast<std::size_t>(image_[k])) seen[k] = true;
  }
  return cycles;
}

std::string CornerPermutation::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < 4; ++r) {
    if (r) out += ' ';
    out += corner_letter(static_cast<Corner>(r));
    out += "->";
    out += corner_letter(image_[r]);
  }
  return out;
}

char corner_letter(Corner c) noexcept { return "ABCD"[static_cast<int>(c)]; }
char step_letter(Step s) noexcept { return "NESW"[static_cast<int>(s)]; }

CornerPermutation step_permutation(Step dir) noexcept {
  using enum Corner;
  static const CornerPermutation east({C, A, D, B});
  static const CornerPermutation north({C, D, B, A});
  switch (dir) {
    case Step::E: return east;
    case Step::N: return north;
    case Step::W: return east.inverse();
    case Step::S: return north.inverse();
  }
  return {};
}

SigmaWalk walk_sigma(const Board& board, const OrientedHCycle& cycle, const CrosspatchGraph& g, int steps) {
  const int length = steps < 0 ? cycle.length() : steps;
  if (length > cycle.length()) throw std::invalid_argument("walk is longer than the cycle");

  std::map<EdgeId, std::vector<KnightMove>> moves_on;
  for (const KnightMove& mv : g.moves) moves_on[board.edge_id(move_to_edge(board, mv))].push_back(mv);

  const auto role_at = [&](BoardVertex v, Square s) -> std::optional<Corner> {
    const auto around = board.squares_around(v);
    for (std::size_t k = 0; k < 4; ++k)
      if (around[k] == s) return static_cast<Corner>(k);
    return std::nullopt;
  };

  SigmaWalk walk;
  walk.length = length;
  walk.prefixes.push_back(CornerPermutation::identity());

  const BoardVertex base = cycle.vertices.at(0);
  const auto around = board.squares_around(base);
  std::array<Square, 4> at{};
  std::array<Corner, 4> role{};
  for (std::size_t r = 0; r < 4; ++r) {
    if (!around[r]) throw ConsistencyError("corner square missing at " + vertex_text(base));
    at[r] = *around[r];
    role[r] = static_cast<Corner>(r);
    walk.paths[r].push_back(at[r]);
  }

  std::set<KnightMove> used;
  std::set<KnightMove> expected;
  CornerPermutation sigma;
  for (int k = 0; k < length; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const Step dir = cycle.steps[idx];
    const EdgeId e = cycle.edges[idx];
    const BoardVertex head = cycle.vertices[(idx + 1) % cycle.vertices.size()];
    const auto on_edge = moves_on.find(e);
    if (on_edge == moves_on.end() || on_edge->second.size() != 2)
      throw ConsistencyError("red edge does not carry a full cross in G");
    expected.insert(on_edge->second.begin(), on_edge->second.end());

    sigma = sigma.then(step_permutation(dir));
    for (std::size_t r = 0; r < 4; ++r) {
      for (const KnightMove& mv : on_edge->second) {
        if (mv.from != at[r] && mv.to != at[r]) continue;
        const Square next = mv.from == at[r] ? mv.to : mv.from;
        const Point d = displacement(board, at[r], next);
        const Point u = step_delta(dir);
        if (d.x * u.x + d.y * u.y <= 0)
          throw ConsistencyError("move " + square_text(at[r]) + "-" + square_text(next) +
                                 " runs against its red edge");
        if (!used.insert(mv).second) throw ConsistencyError("traced paths share a move");
        at[r] = next;
        walk.paths[r].push_back(next);
        break;
      }
      const auto now = role_at(head, at[r]);
      if (!now) throw ConsistencyError("traced square left the corners of " + vertex_text(head));
      role[r] = *now;
      if (role[r] != sigma(static_cast<Corner>(r)))
        throw ConsistencyError("traced corner disagrees with composed step permutations after " +
                               std::to_string(k + 1) + " steps");
    }
    if (sigma.is_odd() != ((k + 1) % 2 == 1))
      throw ConsistencyError("permutation parity differs from walk length");
    walk.prefixes.push_back(sigma);
  }
  if (used != expected) throw ConsistencyError("traced paths do not cover the walked crosses");
  if (length == cycle.length() && !board.wraps_x() && !board.wraps_y() && sigma.is_odd())
    throw ConsistencyError("closed H-cycle yields an odd permutation");
  walk.sigma = sigma;
  return walk;
}

BraidReport braid_correspondence(const Board& board, const CrosspatchGraph& g, const CrossGraphH& h) {
  BraidReport report;
  try {
    const auto h_cycles = decompose_and_orient(board, h);
    const auto g_cycles = cycle_decomposition(board, g);
    report.h_cycles = h_cycles.size();
    report.g_cycles = g_cycles.count();
    report.g_cycles_per_h.assign(h_cycles.size(), 0);

    std::map<EdgeId, std::size_t> owner;
    for (std::size_t c = 0; c < h_cycles.size(); ++c)
      for (const EdgeId e : h_cycles[c].edges) owner[e] = c;

    for (const auto& cycle : g_cycles.cycles) {
      std::set<std::size_t> hosts;
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const KnightMove mv = make_move(cycle[k], cycle[(k + 1) % cycle.size()]);
        const auto it = owner.find(board.edge_id(move_to_edge(board, mv)));
        if (it == owner.end()) {
          hosts.clear();
          break;
        }
        hosts.insert(it->second);
      }
      if (hosts.size() != 1) {
        report.total = false;
        report.failure = "a G-cycle is not carried by a single H-cycle";
        continue;
      }
      ++report.g_cycles_per_h[*hosts.begin()];
    }

    for (std::size_t c = 0; c < h_cycles.size(); ++c) {
      const SigmaWalk walk = walk_sigma(board, h_cycles[c], g);
      report.sigmas.push_back(walk.sigma);
      report.sigma_cycles_per_h.push_back(walk.sigma.cycle_count());
      if (report.g_cycles_per_h[c] != walk.sigma.cycle_count()) report.counts_match = false;
      if (report.g_cycles_per_h[c] % 2 != 0) report.per_h_even = false;
    }
    report.total_even = report.g_cycles % 2 == 0;
    if (report.failure.empty() && !report.pass()) report.failure = "cycle counts violate the braid structure";
  } catch (const std::exception& ex) {
    report.total = false;
    report.failure = ex.what();
  }
  return report;
}

QuadrantParity quadrant_parity_certificate(const CrossTable& table, const RedSet& reds, BoardVertex u,
                                           int which) {
  const Board& board = table.board();
  const std::vector<Square> squares = quadrant(board, u, which);
  const CrosspatchGraph g = realize_graph(table, reds);
  int degree_sum = 0;
  for (const Square& s : squares) degree_sum += g.degree[static_cast<std::size_t>(board.square_id(s))];
  int h_degree = 0;
  for (const Step dir : {Step::N, Step::E, Step::S, Step::W})
    if (const auto e = board.edge(u, dir))
      h_degree += std::binary_search(reds.edges.begin(), reds.edges.end(), board.edge_id(*e)) ? 1 : 0;
  return {degree_sum % 2, h_degree % 2};
}

std::optional<QuadrantObstruction> find_quadrant_obstruction(const Board& board, Square first, Square second) {
  if (board.topology() != Topology::Rectangle)
    throw UnsupportedTopology("quadrants are defined on rectangular boards only");
  if (!board.has_square(first) || !board.has_square(second) || first == second) return std::nullopt;
  const auto quadrant_of = [](Square s, BoardVertex u) {
    const bool left = s.i <= u.a;
    const bool low = s.j <= u.b;
    return low ? (left ? 1 : 2) : (left ? 4 : 3);
  };
  for (int a = 0; a <= board.width(); ++a) {
    for (int b = 0; b <= board.height(); ++b) {
      const BoardVertex u{a, b};
      const int p = quadrant_of(first, u);
      const int q = quadrant_of(second, u);
      if (p == q) continue;
      for (int k = 1; k <= 4; ++k)
        if (k != p && k != q) return QuadrantObstruction{u, p, k};
    }
  }
  return std::nullopt;
}

PseudotourReport verify_pseudotour(const CrossTable& table, const RedSet& reds) {
  const Board& board = table.board();
  PseudotourReport report;
  for (const EdgeId e : reds.edges) {
    if (e < 0 || e >= board.edge_count() || !table.colorable(e)) {
      report.problems.push_back("red edge without a cross pair");
      return report;
    }
  }
  report.cross_closed = true;
  const CrosspatchGraph g = realize_graph(table, reds);
  report.pseudotour = is_pseudotour(board, g);
  if (!report.pseudotour) report.problems.push_back("some square does not have degree 2");

  const CrossGraphH h = build_h(board, reds);
  const HDegreeReport degrees = verify_h_degrees(board, h);
  report.even_degrees = degrees.all_even;
  report.degrees_0_or_2 = degrees.zero_or_two;
  report.h_degree_histogram = degrees.histogram;
  for (VertexId id = 0; id < board.vertex_count() && !report.odd_vertex; ++id)
    if (h.degree[static_cast<std::size_t>(id)] % 2 != 0) report.odd_vertex = board.vertex_at(id);
  if (!report.even_degrees) report.problems.push_back("H has a vertex of odd degree at " + vertex_text(*degrees.witness));
  else if (!report.degrees_0_or_2) report.problems.push_back("H has a vertex of degree 4 at " + vertex_text(*degrees.witness));

  if (report.pseudotour) report.g_cycles = cycle_decomposition(board, g).count();
  if (!report.pseudotour || !report.degrees_0_or_2) return report;

  try {
    const auto cycles = decompose_and_orient(board, h);
    report.h_cycles = cycles.size();
    for (const auto& cycle : cycles) report.sigmas.push_back(walk_sigma(board, cycle, g).sigma);
    report.corner_walk = true;
  } catch (const std::exception& ex) {
    report.problems.push_back(std::string("corner walk: ") + ex.what());
  }

  const BraidReport braid = braid_correspondence(board, g, h);
  report.even_cycles = braid.pass();
  if (!report.even_cycles) report.problems.push_back("braid: " + braid.failure);
  return report;
}

}  // namespace crosspatch
