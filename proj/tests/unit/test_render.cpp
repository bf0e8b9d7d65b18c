#include <doctest.h>

#include <regex>

#include "crosspatch/errors.hpp"
#include "crosspatch/render.hpp"

using namespace crosspatch;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++count;
  return count;
}

std::size_t polygon_segments(const std::string& svg, const std::string& tag) {
  const std::regex points("<" + tag + " class=\"[a-z]+\" points=\"([^\"]*)\"");
  std::size_t segments = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), points); it != std::sregex_iterator(); ++it) {
    const std::size_t vertices = occurrences((*it)[1].str(), ",");
    segments += tag == "polygon" ? vertices : vertices - 1;
  }
  return segments;
}

}  // namespace

TEST_CASE("svg of the 4x4 pseudotour") {
  const Board b = Board::rectangle(4, 4);
  const RedSet reds = all_pseudotours(CrossTable(b)).at(0);
  const std::string svg = render_svg(b, reds);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(occurrences(svg, "class=\"red-edge\"") == 8);
  CHECK(occurrences(svg, "class=\"board-edge\"") == 40 - 8);
  CHECK(occurrences(svg, "<polygon") == 4);
  CHECK(polygon_segments(svg, "polygon") == 16);
  CHECK(occurrences(svg, "<circle") == 8);
}

TEST_CASE("svg of an empty red set is the lattice only") {
  const std::string svg = render_svg(Board::rectangle(3, 2), {});
  CHECK(occurrences(svg, "class=\"board-edge\"") == 17);
  CHECK(occurrences(svg, "red-edge") == 0);
  CHECK(occurrences(svg, "<polygon") == 0);
  CHECK(occurrences(svg, "<circle") == 0);
}

TEST_CASE("svg of the ring tour") {
  const TourResult r = search_closed_tour({Board::ring3(), TourKind::Closed, 1000000});
  REQUIRE(r.witness);
  const std::string svg = render_svg(Board::ring3(), r.witness->reds, {}, &*r.witness);
  CHECK(occurrences(svg, "<polygon") == 1);
  CHECK(polygon_segments(svg, "polygon") == 8);
  CHECK(occurrences(svg, "<circle") == 4);
  CHECK(occurrences(svg, "class=\"hole\"") == 1);
}

TEST_CASE("wrapped boards draw individual moves") {
  const auto found = find_odd_degree_counterexample(Topology::Torus, 6);
  REQUIRE(found.witness);
  const std::string svg = render_svg(found.witness->board, found.witness->reds, {12});
  CHECK(occurrences(svg, "class=\"move\"") == 2 * found.witness->reds.edges.size());
}

TEST_CASE("ascii rendering of H") {
  const Board b = Board::rectangle(4, 4);
  const RedSet reds = all_pseudotours(CrossTable(b)).at(0);
  const std::string expected =
      ".   .   .   .   .\n"
      "\n"
      ".   +---+---+   .\n"
      "    |       |\n"
      ".   +   .   +   .\n"
      "    |       |\n"
      ".   +---+---+   .\n"
      "\n"
      ".   .   .   .   .\n";
  CHECK(render_ascii(b, reds) == expected);
  CHECK(render_ascii(Board::ring3(), {}) ==
        ".   .   .   .\n\n.   .   .   .\n      #\n.   .   .   .\n\n.   .   .   .\n");
}

TEST_CASE("invalid input is rejected before rendering") {
  const Board b = Board::rectangle(4, 4);
  CHECK_THROWS_AS(render_svg(b, RedSet{{0}}), ValidationError);
  CHECK_THROWS_AS(render_ascii(b, RedSet{{0}}), ValidationError);
  const RedSet reds = all_pseudotours(CrossTable(b)).at(0);
  RedSet unsorted = reds;
  std::swap(unsorted.edges[0], unsorted.edges[1]);
  CHECK_THROWS_AS(render_svg(b, unsorted), ValidationError);
  CHECK_THROWS_AS(render_svg(b, reds, {0}), ValidationError);
  TourWitness fake;
  fake.reds = reds;
  fake.sequence = b.squares();
  CHECK_THROWS_AS(render_svg(b, reds, {}, &fake), ValidationError);
}
