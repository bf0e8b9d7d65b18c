#include "crosspatch/board.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "crosspatch/errors.hpp"

namespace crosspatch {
namespace {

int floor_mod(int value, int modulus) noexcept {
  const int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

std::string square_text(Square s) {
  return "(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
}

constexpr int kMinWrappedLength = 5;

}  // namespace

const char* topology_name(Topology t) noexcept {
  switch (t) {
    case Topology::Rectangle: return "rectangle";
    case Topology::CylinderX: return "cylinder_x";
    case Topology::CylinderY: return "cylinder_y";
    case Topology::Torus: return "torus";
    case Topology::SquareSubset: return "subset";
  }
  return "?";
}

Step opposite(Step s) noexcept {
  switch (s) {
    case Step::N: return Step::S;
    case Step::E: return Step::W;
    case Step::S: return Step::N;
    case Step::W: return Step::E;
  }
  return s;
}

Point step_delta(Step s) noexcept {
  switch (s) {
    case Step::N: return {0, 1};
    case Step::E: return {1, 0};
    case Step::S: return {0, -1};
    case Step::W: return {-1, 0};
  }
  return {};
}

Board::Board(Topology topology, int m, int n, std::vector<Square> removed)
    : topology_(topology), m_(m), n_(n), removed_(std::move(removed)) {
  if (m < 1 || n < 1) throw InvalidBoard("board dimensions must be positive");
  if (wraps_x() && m < kMinWrappedLength)
    throw InvalidBoard("a wrapped column axis needs at least 5 columns");
  if (wraps_y() && n < kMinWrappedLength)
    throw InvalidBoard("a wrapped row axis needs at least 5 rows");
  if (topology != Topology::SquareSubset && !removed_.empty())
    throw InvalidBoard("only subset boards may remove squares");

  std::sort(removed_.begin(), removed_.end());
  if (std::adjacent_find(removed_.begin(), removed_.end()) != removed_.end())
    throw InvalidBoard("removed squares must be distinct");

  present_.assign(static_cast<std::size_t>(m * n), true);
  for (const Square& s : removed_) {
    if (s.i < 1 || s.i > m || s.j < 1 || s.j > n)
      throw InvalidBoard("removed square " + square_text(s) + " lies outside the board");
    present_[static_cast<std::size_t>((s.i - 1) * n + (s.j - 1))] = false;
  }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (present_[static_cast<std::size_t>((i - 1) * n + (j - 1))]) squares_.push_back({i, j});

  edge_by_midpoint_.assign(static_cast<std::size_t>((2 * m + 1) * (2 * n + 1)), -1);
  const int x_end = wraps_x() ? 2 * m : 2 * m + 1;
  const int y_end = wraps_y() ? 2 * n : 2 * n + 1;
  for (int x = 0; x < x_end; ++x) {
    for (int y = 0; y < y_end; ++y) {
      if ((x + y) % 2 == 0) continue;
      const BoardEdge e = (x % 2 == 0) ? BoardEdge{{x / 2, (y - 1) / 2}, EdgeDir::N}
                                       : BoardEdge{{(x - 1) / 2, y / 2}, EdgeDir::E};
      if (!edge_on_lattice(e)) continue;
      edge_by_midpoint_[static_cast<std::size_t>(midpoint_slot({x, y}))] =
          static_cast<EdgeId>(edges_.size());
      edges_.push_back(e);
    }
  }
}

bool Board::wraps_x() const noexcept {
  return topology_ == Topology::CylinderX || topology_ == Topology::Torus;
}

bool Board::wraps_y() const noexcept {
  return topology_ == Topology::CylinderY || topology_ == Topology::Torus;
}

std::optional<Square> Board::normalize(Square s) const {
  if (wraps_x()) s.i = floor_mod(s.i - 1, m_) + 1;
  if (wraps_y()) s.j = floor_mod(s.j - 1, n_) + 1;
  if (s.i < 1 || s.i > m_ || s.j < 1 || s.j > n_) return std::nullopt;
  if (!present_[static_cast<std::size_t>((s.i - 1) * n_ + (s.j - 1))]) return std::nullopt;
  return s;
}

bool Board::has_square(Square s) const { return normalize(s).has_value(); }

SquareId Board::square_id(Square s) const {
  const auto norm = normalize(s);
  if (!norm) throw DomainError("square " + square_text(s) + " is not on the board");
  return (norm->i - 1) * n_ + (norm->j - 1);
}

Square Board::square_at(SquareId id) const {
  if (id < 0 || id >= m_ * n_) throw DomainError("square id out of range");
  return {id / n_ + 1, id % n_ + 1};
}

std::optional<BoardVertex> Board::normalize(BoardVertex v) const {
  if (wraps_x()) v.a = floor_mod(v.a, m_);
  if (wraps_y()) v.b = floor_mod(v.b, n_);
  if (v.a < 0 || v.a > m_ || v.b < 0 || v.b > n_) return std::nullopt;
  return v;
}

VertexId Board::vertex_id(BoardVertex v) const {
  const auto norm = normalize(v);
  if (!norm) throw DomainError("board vertex is not on the board");
  return norm->a * vertex_rows() + norm->b;
}

BoardVertex Board::vertex_at(VertexId id) const {
  if (id < 0 || id >= vertex_count()) throw DomainError("vertex id out of range");
  return {id / vertex_rows(), id % vertex_rows()};
}

std::array<std::optional<Square>, 4> Board::squares_around(BoardVertex v) const {
  return {normalize(Square{v.a, v.b}), normalize(Square{v.a + 1, v.b}),
          normalize(Square{v.a + 1, v.b + 1}), normalize(Square{v.a, v.b + 1})};
}

bool Board::edge_on_lattice(BoardEdge e) const {
  const auto anchor = normalize(e.anchor);
  if (!anchor) return false;
  const auto [a, b] = *anchor;
  if (e.dir == EdgeDir::N) {
    if (!wraps_y() && b >= n_) return false;
    if (topology_ == Topology::SquareSubset)
      return has_square({a, b + 1}) || has_square({a + 1, b + 1});
  } else {
    if (!wraps_x() && a >= m_) return false;
    if (topology_ == Topology::SquareSubset)
      return has_square({a + 1, b}) || has_square({a + 1, b + 1});
  }
  return true;
}

Point Board::wrap(Point p) const noexcept {
  if (wraps_x()) p.x = floor_mod(p.x, 2 * m_);
  if (wraps_y()) p.y = floor_mod(p.y, 2 * n_);
  return p;
}

std::optional<BoardEdge> Board::edge_at_midpoint(Point p) const {
  p = wrap(p);
  if (p.x < 0 || p.x > 2 * m_ || p.y < 0 || p.y > 2 * n_) return std::nullopt;
  const EdgeId id = edge_by_midpoint_[static_cast<std::size_t>(midpoint_slot(p))];
  if (id < 0) return std::nullopt;
  return edges_[static_cast<std::size_t>(id)];
}

std::optional<EdgeId> Board::find_edge(BoardEdge e) const {
  const Point p = wrap(midpoint(e));
  if (p.x < 0 || p.x > 2 * m_ || p.y < 0 || p.y > 2 * n_) return std::nullopt;
  const EdgeId id = edge_by_midpoint_[static_cast<std::size_t>(midpoint_slot(p))];
  if (id < 0) return std::nullopt;
  return id;
}

EdgeId Board::edge_id(BoardEdge e) const {
  const auto id = find_edge(e);
  if (!id) throw DomainError("board edge is not on the board");
  return *id;
}

std::optional<BoardEdge> Board::edge(BoardVertex v, Step dir) const {
  if (!normalize(v)) return std::nullopt;
  BoardEdge e;
  switch (dir) {
    case Step::N: e = {v, EdgeDir::N}; break;
    case Step::E: e = {v, EdgeDir::E}; break;
    case Step::S: e = {{v.a, v.b - 1}, EdgeDir::N}; break;
    case Step::W: e = {{v.a - 1, v.b}, EdgeDir::E}; break;
  }
  const auto id = find_edge(e);
  if (!id) return std::nullopt;
  return edges_[static_cast<std::size_t>(*id)];
}

std::pair<BoardVertex, BoardVertex> Board::endpoints(BoardEdge e) const {
  const BoardVertex far = e.dir == EdgeDir::N ? BoardVertex{e.anchor.a, e.anchor.b + 1}
                                              : BoardVertex{e.anchor.a + 1, e.anchor.b};
  const auto lo = normalize(e.anchor);
  const auto hi = normalize(far);
  if (!lo || !hi) throw DomainError("board edge is not on the board");
  return {*lo, *hi};
}

std::string Board::descriptor() const {
  std::string out = topology_ == Topology::Rectangle ? "rect" : topology_name(topology_);
  out += ":" + std::to_string(m_) + "x" + std::to_string(n_);
  if (topology_ == Topology::SquareSubset) {
    out += ":";
    for (std::size_t k = 0; k < removed_.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(removed_[k].i) + "." + std::to_string(removed_[k].j);
    }
  }
  return out;
}

namespace {

int parse_int(std::string_view text, const std::string& whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidBoard("malformed board descriptor '" + whole + "'");
  return value;
}

std::pair<int, int> parse_dims(std::string_view text, const std::string& whole) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) throw InvalidBoard("malformed board descriptor '" + whole + "'");
  return {parse_int(text.substr(0, x), whole), parse_int(text.substr(x + 1), whole)};
}

}  // namespace

Board parse_board(const std::string& descriptor) {
  std::string_view rest = descriptor;
  Topology topology = Topology::Rectangle;
  if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
    const std::string_view name = rest.substr(0, colon);
    rest = rest.substr(colon + 1);
    if (name == "rect" || name == "rectangle") topology = Topology::Rectangle;
    else if (name == "cylinder_x") topology = Topology::CylinderX;
    else if (name == "cylinder_y") topology = Topology::CylinderY;
    else if (name == "torus") topology = Topology::Torus;
    else if (name == "subset") topology = Topology::SquareSubset;
    else throw InvalidBoard("unknown topology '" + std::string(name) + "'");
  }
  std::string_view dims = rest;
  std::vector<Square> removed;
  if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
    if (topology != Topology::SquareSubset)
      throw InvalidBoard("only subset boards list removed squares");
    dims = rest.substr(0, colon);
    std::string_view list = rest.substr(colon + 1);
    while (!list.empty()) {
      const auto comma = list.find(',');
      const std::string_view item = list.substr(0, comma);
      const auto dot = item.find('.');
      if (dot == std::string_view::npos)
        throw InvalidBoard("malformed removed square in '" + descriptor + "'");
      removed.push_back({parse_int(item.substr(0, dot), descriptor),
                         parse_int(item.substr(dot + 1), descriptor)});
      list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    }
  }
  const auto [m, n] = parse_dims(dims, descriptor);
  return Board(topology, m, n, std::move(removed));
}

Corners corner_vertices(const Board& board, Square s) {
  const auto sq = board.normalize(s);
  if (!sq) throw DomainError("square " + square_text(s) + " is not on the board");
  const auto at = [&](int a, int b) { return *board.normalize(BoardVertex{a, b}); };
  return {at(sq->i, sq->j), at(sq->i - 1, sq->j), at(sq->i - 1, sq->j - 1), at(sq->i, sq->j - 1)};
}

std::vector<BoardEdge> surround8(const Board& board, Square s) {
  const Corners c = corner_vertices(board, s);
  const std::pair<BoardVertex, Step> order[] = {
      {c.a, Step::E}, {c.a, Step::N}, {c.b, Step::N}, {c.b, Step::W},
      {c.c, Step::W}, {c.c, Step::S}, {c.d, Step::S}, {c.d, Step::E},
  };
  std::vector<BoardEdge> out;
  out.reserve(8);
  for (const auto& [v, dir] : order)
    if (const auto e = board.edge(v, dir)) out.push_back(*e);
  return out;
}

std::vector<Square> quadrant(const Board& board, BoardVertex u, int which) {
  if (board.topology() != Topology::Rectangle)
    throw UnsupportedTopology("quadrants are defined on rectangular boards only");
  if (!board.has_vertex(u)) throw DomainError("board vertex is not on the board");
  if (which < 1 || which > 4) throw std::invalid_argument("quadrant index must be 1..4");
  const bool left = which == 1 || which == 4;
  const bool low = which == 1 || which == 2;
  std::vector<Square> out;
  for (const Square& s : board.squares())
    if ((s.i <= u.a) == left && (s.j <= u.b) == low) out.push_back(s);
  return out;
}

}  // namespace crosspatch
