#pragma once

// Boards, squares, board vertices and board edges.
//
// Geometry is carried in doubled coordinates: the center of square (i, j) is
// (2i - 1, 2j - 1), board vertex (a, b) sits at (2a, 2b), and the midpoint of
// every board edge and of every knight move is an integer point.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crosspatch {

enum class Topology { Rectangle, CylinderX, CylinderY, Torus, SquareSubset };

struct Square {
  int i = 0;  // column, 1..m
  int j = 0;  // row, 1..n
  friend auto operator<=>(const Square&, const Square&) = default;
};

struct BoardVertex {
  int a = 0;  // 0..m
  int b = 0;  // 0..n
  friend auto operator<=>(const BoardVertex&, const BoardVertex&) = default;
};

enum class EdgeDir : std::uint8_t { N, E };

// An undirected unit edge, stored as the N or E edge of its lower/left end.
struct BoardEdge {
  BoardVertex anchor;
  EdgeDir dir = EdgeDir::N;
  friend auto operator<=>(const BoardEdge&, const BoardEdge&) = default;
};

// Unit steps between adjacent board vertices.
enum class Step : std::uint8_t { N, E, S, W };

// Corner roles of a square: top-right, top-left, bottom-left, bottom-right.
enum class Corner : std::uint8_t { A, B, C, D };

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

using SquareId = int;
using VertexId = int;
using EdgeId = int;

class Board {
 public:
  Board(Topology topology, int m, int n, std::vector<Square> removed = {});

  static Board rectangle(int m, int n) { return {Topology::Rectangle, m, n}; }
  static Board cylinder_x(int m, int n) { return {Topology::CylinderX, m, n}; }
  static Board cylinder_y(int m, int n) { return {Topology::CylinderY, m, n}; }
  static Board torus(int m, int n) { return {Topology::Torus, m, n}; }
  static Board subset(int m, int n, std::vector<Square> removed) {
    return {Topology::SquareSubset, m, n, std::move(removed)};
  }
  // The eight-square ring: a 3x3 board without its central square.
  static Board ring3() { return subset(3, 3, {{2, 2}}); }

  Topology topology() const noexcept { return topology_; }
  int width() const noexcept { return m_; }
  int height() const noexcept { return n_; }
  const std::vector<Square>& removed() const noexcept { return removed_; }
  bool wraps_x() const noexcept;
  bool wraps_y() const noexcept;

  // Squares. Ids are slots of the full m x n grid in (i, j) lexicographic
  // order, so removed squares keep a (vacant) id.
  std::optional<Square> normalize(Square s) const;
  bool has_square(Square s) const;
  int square_slots() const noexcept { return m_ * n_; }
  SquareId square_id(Square s) const;
  Square square_at(SquareId id) const;
  bool slot_present(SquareId id) const { return present_[static_cast<std::size_t>(id)]; }
  const std::vector<Square>& squares() const noexcept { return squares_; }

  // Board vertices, in (a, b) lexicographic order.
  int vertex_columns() const noexcept { return wraps_x() ? m_ : m_ + 1; }
  int vertex_rows() const noexcept { return wraps_y() ? n_ : n_ + 1; }
  int vertex_count() const noexcept { return vertex_columns() * vertex_rows(); }
  std::optional<BoardVertex> normalize(BoardVertex v) const;
  bool has_vertex(BoardVertex v) const { return normalize(v).has_value(); }
  VertexId vertex_id(BoardVertex v) const;
  BoardVertex vertex_at(VertexId id) const;
  // Squares whose A, B, C, D corner is v (nullopt where off-board).
  std::array<std::optional<Square>, 4> squares_around(BoardVertex v) const;

  // Board edges, in canonical order: lexicographic on the doubled midpoint.
  const std::vector<BoardEdge>& edges() const noexcept { return edges_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const BoardEdge& edge_at(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }
  std::optional<EdgeId> find_edge(BoardEdge e) const;
  EdgeId edge_id(BoardEdge e) const;
  bool has_edge(BoardEdge e) const { return find_edge(e).has_value(); }
  // N(v), E(v), S(v), W(v) in canonical form, if that edge exists.
  std::optional<BoardEdge> edge(BoardVertex v, Step dir) const;
  std::pair<BoardVertex, BoardVertex> endpoints(BoardEdge e) const;
  std::optional<BoardEdge> edge_at_midpoint(Point p) const;

  static Point center(Square s) noexcept { return {2 * s.i - 1, 2 * s.j - 1}; }
  static Point position(BoardVertex v) noexcept { return {2 * v.a, 2 * v.b}; }
  static Point midpoint(BoardEdge e) noexcept {
    return e.dir == EdgeDir::N ? Point{2 * e.anchor.a, 2 * e.anchor.b + 1}
                               : Point{2 * e.anchor.a + 1, 2 * e.anchor.b};
  }
  // Reduces a doubled-coordinate point onto the fundamental domain.
  Point wrap(Point p) const noexcept;

  // Text form accepted by parse_board: "rect:4x4", "torus:5x5",
  // "subset:3x3:2.2", ...
  std::string descriptor() const;

  friend bool operator==(const Board& lhs, const Board& rhs) {
    return lhs.topology_ == rhs.topology_ && lhs.m_ == rhs.m_ && lhs.n_ == rhs.n_ &&
           lhs.removed_ == rhs.removed_;
  }

 private:
  bool edge_on_lattice(BoardEdge e) const;
  int midpoint_slot(Point p) const noexcept { return p.x * (2 * n_ + 1) + p.y; }

  Topology topology_;
  int m_;
  int n_;
  std::vector<Square> removed_;
  std::vector<bool> present_;
  std::vector<Square> squares_;
  std::vector<BoardEdge> edges_;
  std::vector<EdgeId> edge_by_midpoint_;
};

Board parse_board(const std::string& descriptor);
const char* topology_name(Topology t) noexcept;

struct Corners {
  BoardVertex a, b, c, d;
};

// A(s) = (i, j), B(s) = (i-1, j), C(s) = (i-1, j-1), D(s) = (i, j-1).
Corners corner_vertices(const Board& board, Square s);

// E(A), N(A), N(B), W(B), W(C), S(C), S(D), E(D) of s, those that exist.
std::vector<BoardEdge> surround8(const Board& board, Square s);

// Quadrants of a rectangle around u = (a, b), numbered 1..4 as
//   1: i <= a, j <= b    2: i > a, j <= b    3: i > a, j > b    4: i <= a, j > b
std::vector<Square> quadrant(const Board& board, BoardVertex u, int which);

Step opposite(Step s) noexcept;
Point step_delta(Step s) noexcept;

}  // namespace crosspatch
