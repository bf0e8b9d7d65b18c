#include "crosspatch/render.hpp"

#include <algorithm>
#include <sstream>

#include "crosspatch/errors.hpp"

namespace crosspatch {
namespace {

void validate(const CrossTable& table, const RedSet& reds, const TourWitness* witness) {
  const Board& board = table.board();
  for (const EdgeId e : reds.edges)
    if (e < 0 || e >= board.edge_count() || !table.colorable(e))
      throw ValidationError("red edge without a cross pair cannot be rendered");
  if (!std::is_sorted(reds.edges.begin(), reds.edges.end()) ||
      std::adjacent_find(reds.edges.begin(), reds.edges.end()) != reds.edges.end())
    throw ValidationError("red set must be sorted and free of duplicates");
  if (witness) {
    if (witness->reds != reds) throw ValidationError("witness red set differs from the rendered one");
    if (const std::string problem = check_witness(board, *witness); !problem.empty())
      throw ValidationError("witness does not verify: " + problem);
  }
}

class SvgCanvas {
 public:
  SvgCanvas(const Board& board, int unit) : board_(board), unit_(unit) {}

  int width() const { return (2 * board_.width() + 2) * unit_; }
  int height() const { return (2 * board_.height() + 2) * unit_; }
  int px(int x) const { return (x + 1) * unit_; }
  int py(int y) const { return (2 * board_.height() - y + 1) * unit_; }

  std::string line(Point p, Point q, const char* cls, const char* stroke, int w) const {
    std::ostringstream out;
    out << "<line class=\"" << cls << "\" x1=\"" << px(p.x) << "\" y1=\"" << py(p.y) << "\" x2=\"" << px(q.x)
        << "\" y2=\"" << py(q.y) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << w << "\"/>\n";
    return out.str();
  }

  std::string points(const std::vector<Square>& squares) const {
    std::ostringstream out;
    for (std::size_t k = 0; k < squares.size(); ++k) {
      const Point c = Board::center(squares[k]);
      out << (k ? " " : "") << px(c.x) << "," << py(c.y);
    }
    return out.str();
  }

 private:
  const Board& board_;
  int unit_;
};

}  // namespace

std::string render_svg(const Board& board, const RedSet& reds, const SvgOptions& options,
                       const TourWitness* witness) {
  if (options.unit <= 0) throw ValidationError("svg unit must be positive");
  const CrossTable table(board);
  validate(table, reds, witness);
  const CrosspatchGraph g = realize_graph(table, reds);
  const SvgCanvas canvas(board, options.unit);
  const bool wrapped = board.wraps_x() || board.wraps_y();

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas.width() << "\" height=\""
      << canvas.height() << "\" viewBox=\"0 0 " << canvas.width() << " " << canvas.height() << "\">\n";
  out << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << canvas.width() << "\" height=\""
      << canvas.height() << "\" fill=\"white\"/>\n";

  out << "<g class=\"holes\">\n";
  for (const Square& s : board.removed()) {
    const Point c = Board::center(s);
    out << "<rect class=\"hole\" x=\"" << canvas.px(c.x - 1) << "\" y=\"" << canvas.py(c.y + 1)
        << "\" width=\"" << 2 * options.unit << "\" height=\"" << 2 * options.unit << "\" fill=\"#bbbbbb\"/>\n";
  }
  out << "</g>\n";

  const auto segment = [&](const BoardEdge& e) {
    const Point p = Board::position(e.anchor);
    const Point q = e.dir == EdgeDir::N ? Point{p.x, p.y + 2} : Point{p.x + 2, p.y};
    return std::make_pair(p, q);
  };
  out << "<g class=\"lattice\">\n";
  for (EdgeId id = 0; id < board.edge_count(); ++id) {
    if (std::binary_search(reds.edges.begin(), reds.edges.end(), id)) continue;
    const auto [p, q] = segment(board.edge_at(id));
    out << canvas.line(p, q, "board-edge", "#999999", 1);
  }
  out << "</g>\n<g class=\"red\">\n";
  for (const EdgeId id : reds.edges) {
    const auto [p, q] = segment(board.edge_at(id));
    out << canvas.line(p, q, "red-edge", "red", 4);
  }
  out << "</g>\n<g class=\"knight\">\n";

  const bool cyclic = std::all_of(g.degree.begin(), g.degree.end(), [](int d) { return d == 0 || d == 2; });
  if (witness && witness->kind == TourKind::Open && !wrapped) {
    out << "<polyline class=\"tour\" points=\"" << canvas.points(witness->sequence)
        << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
  } else if (cyclic && !wrapped) {
    for (const auto& cycle : cycle_decomposition(board, g).cycles)
      out << "<polygon class=\"cycle\" points=\"" << canvas.points(cycle)
          << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
  } else {
    for (const KnightMove& mv : g.moves) {
      const Point c = Board::center(mv.from);
      const Point d = displacement(board, mv.from, mv.to);
      out << canvas.line(c, {c.x + 2 * d.x, c.y + 2 * d.y}, "move", "#1f4e9c", 2);
    }
  }
  out << "</g>\n<g class=\"crosses\">\n";
  for (const EdgeId id : reds.edges) {
    const Point m = Board::midpoint(board.edge_at(id));
    out << "<circle class=\"cross\" cx=\"" << canvas.px(m.x) << "\" cy=\"" << canvas.py(m.y) << "\" r=\""
        << std::max(2, options.unit / 6) << "\" fill=\"red\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render_ascii(const Board& board, const RedSet& reds) {
  const CrossTable table(board);
  validate(table, reds, nullptr);
  const auto red = [&](BoardVertex v, Step dir) {
    const auto e = board.edge(v, dir);
    return e && std::binary_search(reds.edges.begin(), reds.edges.end(), board.edge_id(*e));
  };
  const auto in_h = [&](BoardVertex v) {
    return red(v, Step::N) || red(v, Step::E) || red(v, Step::S) || red(v, Step::W);
  };
  const int m = board.width();
  const int n = board.height();
  std::ostringstream out;
  for (int b = n; b >= 0; --b) {
    std::string row;
    for (int a = 0; a <= m; ++a) {
      row += in_h({a, b}) ? '+' : '.';
      if (a < m) row += red({a, b}, Step::E) ? "---" : "   ";
    }
    out << row.substr(0, row.find_last_not_of(' ') + 1) << '\n';
    if (b == 0) break;
    row.clear();
    for (int a = 0; a <= m; ++a) {
      row += red({a, b - 1}, Step::N) ? '|' : ' ';
      if (a < m) row += board.has_square({a + 1, b}) ? "   " : " # ";
    }
    const auto last = row.find_last_not_of(' ');
    out << (last == std::string::npos ? std::string{} : row.substr(0, last + 1)) << '\n';
  }
  return out.str();
}

}  // namespace crosspatch
