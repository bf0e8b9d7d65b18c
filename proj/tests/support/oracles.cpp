#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {
namespace {

constexpr std::size_t kSquareLimit = 36;

int reduce(int d, int period) {
  d %= period;
  if (d < 0) d += period;
  if (2 * d > period) d -= period;
  return d;
}

int mod(int x, int period) { return ((x % period) + period) % period; }

std::pair<int, int> offset(const Board& board, Square a, Square b) {
  int dx = b.i - a.i;
  int dy = b.j - a.j;
  if (board.wraps_x()) dx = reduce(dx, board.width());
  if (board.wraps_y()) dy = reduce(dy, board.height());
  return {dx, dy};
}

// Binary branching over moves. Each move is undecided, present or absent;
// a square is finished once it has two present moves.
class TwoFactorSearch {
 public:
  TwoFactorSearch(const Board& board, bool prune_crosses) : prune_(prune_crosses) {
    const auto& squares = board.squares();
    for (std::size_t k = 0; k < squares.size(); ++k) index_[squares[k]] = static_cast<int>(k);
    moves_ = brute_knight_moves(board);
    incident_.resize(squares.size());
    for (std::size_t k = 0; k < moves_.size(); ++k) {
      ends_.push_back({index_.at(moves_[k].first), index_.at(moves_[k].second)});
      incident_[static_cast<std::size_t>(ends_.back()[0])].push_back(static_cast<int>(k));
      incident_[static_cast<std::size_t>(ends_.back()[1])].push_back(static_cast<int>(k));
    }
    partner_.assign(moves_.size(), -1);
    std::map<Point, std::vector<int>> groups;
    for (std::size_t k = 0; k < moves_.size(); ++k)
      groups[brute_midpoint(board, moves_[k])].push_back(static_cast<int>(k));
    for (const auto& [mid, ids] : groups) {
      if (ids.size() > 2) throw std::logic_error("more than two moves share a midpoint");
      if (ids.size() == 2) {
        partner_[static_cast<std::size_t>(ids[0])] = ids[1];
        partner_[static_cast<std::size_t>(ids[1])] = ids[0];
      }
    }
    state_.assign(moves_.size(), kOpen);
    present_.assign(squares.size(), 0);
    open_.assign(squares.size(), 0);
    for (std::size_t s = 0; s < squares.size(); ++s) open_[s] = static_cast<int>(incident_[s].size());
  }

  void run(std::vector<MoveSet>& out, std::uint64_t& raw) {
    bool ok = true;
    if (prune_)
      for (std::size_t k = 0; k < moves_.size() && ok; ++k)
        if (partner_[k] < 0 && state_[k] == kOpen) ok = set(static_cast<int>(k), kAbsent);
    for (std::size_t s = 0; s < incident_.size() && ok; ++s) ok = settle(static_cast<int>(s));
    if (ok) dfs(out, raw);
  }

 private:
  static constexpr int kOpen = -1, kAbsent = 0, kPresent = 1;

  bool set(int move, int value) {
    if (state_[static_cast<std::size_t>(move)] != kOpen) return state_[static_cast<std::size_t>(move)] == value;
    state_[static_cast<std::size_t>(move)] = value;
    trail_.push_back(move);
    for (int s : ends_[static_cast<std::size_t>(move)]) {
      --open_[static_cast<std::size_t>(s)];
      if (value == kPresent) ++present_[static_cast<std::size_t>(s)];
    }
    if (prune_ && partner_[static_cast<std::size_t>(move)] >= 0 &&
        !set(partner_[static_cast<std::size_t>(move)], value))
      return false;
    for (int s : ends_[static_cast<std::size_t>(move)])
      if (!settle(s)) return false;
    return true;
  }

  bool settle(int s) {
    const auto k = static_cast<std::size_t>(s);
    if (present_[k] > 2 || present_[k] + open_[k] < 2) return false;
    if (open_[k] == 0) return true;
    const int forced = present_[k] == 2 ? kAbsent : (present_[k] + open_[k] == 2 ? kPresent : kOpen);
    if (forced == kOpen) return true;
    for (int mv : incident_[k])
      if (state_[static_cast<std::size_t>(mv)] == kOpen && !set(mv, forced)) return false;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int move = trail_.back();
      trail_.pop_back();
      for (int s : ends_[static_cast<std::size_t>(move)]) {
        ++open_[static_cast<std::size_t>(s)];
        if (state_[static_cast<std::size_t>(move)] == kPresent) --present_[static_cast<std::size_t>(s)];
      }
      state_[static_cast<std::size_t>(move)] = kOpen;
    }
  }

  void dfs(std::vector<MoveSet>& out, std::uint64_t& raw) {
    int branch = -1;
    for (std::size_t s = 0; s < incident_.size() && branch < 0; ++s)
      if (open_[s] > 0)
        for (int mv : incident_[s])
          if (state_[static_cast<std::size_t>(mv)] == kOpen) {
            branch = mv;
            break;
          }
    if (branch < 0) {
      ++raw;
      for (std::size_t k = 0; k < moves_.size(); ++k)
        if (state_[k] == kPresent && (partner_[k] < 0 || state_[static_cast<std::size_t>(partner_[k])] != kPresent))
          return;
      MoveSet set;
      for (std::size_t k = 0; k < moves_.size(); ++k)
        if (state_[k] == kPresent) set.push_back(moves_[k]);
      out.push_back(std::move(set));
      return;
    }
    for (int value : {kPresent, kAbsent}) {
      const std::size_t mark = trail_.size();
      if (set(branch, value)) dfs(out, raw);
      undo(mark);
    }
  }

  bool prune_;
  std::map<Square, int> index_;
  std::vector<Move> moves_;
  std::vector<std::array<int, 2>> ends_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> partner_;
  std::vector<int> state_;
  std::vector<int> present_;
  std::vector<int> open_;
  std::vector<int> trail_;
};

}  // namespace

std::vector<Move> brute_knight_moves(const Board& board) {
  const auto& squares = board.squares();
  std::vector<Move> moves;
  for (std::size_t x = 0; x < squares.size(); ++x)
    for (std::size_t y = x + 1; y < squares.size(); ++y) {
      const auto [dx, dy] = offset(board, squares[x], squares[y]);
      const int ax = std::abs(dx), ay = std::abs(dy);
      if ((ax == 1 && ay == 2) || (ax == 2 && ay == 1)) moves.emplace_back(squares[x], squares[y]);
    }
  std::sort(moves.begin(), moves.end());
  return moves;
}

Point brute_midpoint(const Board& board, const Move& mv) {
  const auto [dx, dy] = offset(board, mv.first, mv.second);
  Point p{2 * mv.first.i - 1 + dx, 2 * mv.first.j - 1 + dy};
  if (board.wraps_x()) p.x = mod(p.x, 2 * board.width());
  if (board.wraps_y()) p.y = mod(p.y, 2 * board.height());
  return p;
}

std::map<Point, std::vector<Move>> midpoint_groups(const Board& board) {
  std::map<Point, std::vector<Move>> groups;
  for (const Move& mv : brute_knight_moves(board)) groups[brute_midpoint(board, mv)].push_back(mv);
  return groups;
}

std::vector<MoveSet> two_factors(const Board& board, std::uint64_t* raw_two_factors, bool prune_crosses) {
  if (board.squares().size() > kSquareLimit)
    throw std::invalid_argument("two-factor oracle refuses boards with more than 36 squares");
  std::vector<MoveSet> out;
  std::uint64_t raw = 0;
  TwoFactorSearch(board, prune_crosses).run(out, raw);
  if (raw_two_factors) *raw_two_factors = raw;
  std::sort(out.begin(), out.end());
  return out;
}

MoveSet to_move_set(const crosspatch::CrosspatchGraph& g) {
  MoveSet out;
  for (const auto& mv : g.moves) out.emplace_back(std::min(mv.from, mv.to), std::max(mv.from, mv.to));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_cycles(const MoveSet& moves) {
  std::map<Square, std::vector<Square>> adjacent;
  for (const auto& [a, b] : moves) {
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }
  std::set<Square> seen;
  std::size_t cycles = 0;
  for (const auto& [start, unused] : adjacent) {
    if (seen.count(start)) continue;
    ++cycles;
    std::vector<Square> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const Square s = stack.back();
      stack.pop_back();
      for (const Square& t : adjacent[s])
        if (seen.insert(t).second) stack.push_back(t);
    }
  }
  return cycles;
}

crosspatch::RedSet random_red_set(const crosspatch::CrossTable& table, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  crosspatch::RedSet reds;
  for (crosspatch::EdgeId e : table.colorable_edges())
    if (coin(rng)) reds.edges.push_back(e);
  return reds;
}

}  // namespace oracle
