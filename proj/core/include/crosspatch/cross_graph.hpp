#pragma once

// The cross graph H: board vertices joined by red board edges. On a
// rectangular board every vertex of H has degree 0 or 2, H splits into simple
// even cycles, and walking an H-cycle permutes the four squares around its
// base vertex by a permutation whose parity is the walk length.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crosspatch/pseudotour.hpp"

namespace crosspatch {

struct CrossGraphH {
  std::vector<std::vector<EdgeId>> incident;  // by vertex id, ascending
  std::vector<int> degree;                    // by vertex id
};

CrossGraphH build_h(const Board& board, const RedSet& reds);

struct HDegreeReport {
  bool all_even = true;     // every H-degree even
  bool zero_or_two = true;  // every H-degree 0 or 2
  std::map<int, int> histogram;
  std::optional<BoardVertex> witness;  // first offending vertex

  bool pass() const noexcept { return all_even && zero_or_two; }
};

HDegreeReport verify_h_degrees(const Board& board, const CrossGraphH& h);

struct OrientedHCycle {
  std::vector<BoardVertex> vertices;  // vertices[0] is the base; closing step returns to it
  std::vector<Step> steps;            // steps[k] leads from vertices[k] to vertices[k+1]
  std::vector<EdgeId> edges;

  int length() const noexcept { return static_cast<int>(steps.size()); }
};

// Starts each cycle at its lowest vertex and leaves along the lower-id edge.
// Throws StructureError for vertices of degree other than 0 or 2.
std::vector<OrientedHCycle> decompose_and_orient(const Board& board, const CrossGraphH& h);

class CornerPermutation {
 public:
  CornerPermutation() noexcept : image_{Corner::A, Corner::B, Corner::C, Corner::D} {}
  explicit CornerPermutation(std::array<Corner, 4> image);

  static CornerPermutation identity() noexcept { return {}; }

  Corner operator()(Corner c) const noexcept { return image_[static_cast<std::size_t>(c)]; }
  // Apply *this first, then `next`.
  CornerPermutation then(const CornerPermutation& next) const noexcept;
  CornerPermutation inverse() const noexcept;
  int cycle_count() const noexcept;  // fixed points included
  bool is_odd() const noexcept { return (4 - cycle_count()) % 2 == 1; }
  std::string to_string() const;

  friend bool operator==(const CornerPermutation&, const CornerPermutation&) = default;

 private:
  std::array<Corner, 4> image_;
};

char corner_letter(Corner c) noexcept;
char step_letter(Step s) noexcept;

// How a unit step of H relabels the corner squares: the square with role r
// at the tail vertex ends with role step_permutation(dir)(r) at the head.
CornerPermutation step_permutation(Step dir) noexcept;

struct SigmaWalk {
  CornerPermutation sigma;
  std::vector<CornerPermutation> prefixes;  // prefixes[k] after k steps
  std::array<std::vector<Square>, 4> paths; // G-paths from the corner squares A..D of the base
  int length = 0;
};

// Composes step permutations along the first `steps` steps of `cycle` (all of
// them when negative) and independently traces the four corner squares
// through G. Throws ConsistencyError when the two disagree, when the traced
// paths share a move or miss one, or when a parity claim fails.
SigmaWalk walk_sigma(const Board& board, const OrientedHCycle& cycle, const CrosspatchGraph& g,
                     int steps = -1);

struct BraidReport {
  std::size_t g_cycles = 0;
  std::size_t h_cycles = 0;
  std::vector<int> g_cycles_per_h;
  std::vector<int> sigma_cycles_per_h;
  std::vector<CornerPermutation> sigmas;
  bool total = true;         // every G-cycle lies on a single H-cycle
  bool counts_match = true;  // per H-cycle G count == permutation-cycle count of sigma
  bool per_h_even = true;
  bool total_even = true;
  std::string failure;

  bool pass() const noexcept { return total && counts_match && per_h_even && total_even; }
};

BraidReport braid_correspondence(const Board& board, const CrosspatchGraph& g, const CrossGraphH& h);

struct QuadrantParity {
  int lhs = 0;  // sum of G-degrees over the quadrant, mod 2
  int rhs = 0;  // H-degree of the vertex, mod 2
  bool consistent() const noexcept { return lhs == rhs; }
};

// Rectangle only. Holds for every cross-closed red set, not just pseudotours.
QuadrantParity quadrant_parity_certificate(const CrossTable& table, const RedSet& reds, BoardVertex u,
                                           int which = 1);

struct QuadrantObstruction {
  BoardVertex vertex;
  int odd_quadrant = 0;   // holds exactly one of the two endpoints
  int empty_quadrant = 0; // holds neither
};

// A vertex around which an open tour with these endpoints would need both an
// odd and an even H-degree.
std::optional<QuadrantObstruction> find_quadrant_obstruction(const Board& board, Square first,
                                                             Square second);

struct PseudotourReport {
  bool cross_closed = false;
  bool pseudotour = false;
  bool even_degrees = false;
  bool degrees_0_or_2 = false;
  bool corner_walk = false;
  bool even_cycles = false;
  std::size_t g_cycles = 0;
  std::size_t h_cycles = 0;
  std::map<int, int> h_degree_histogram;
  std::vector<CornerPermutation> sigmas;
  std::optional<BoardVertex> odd_vertex;
  std::vector<std::string> problems;

  bool pass() const noexcept { return cross_closed && pseudotour && even_degrees && degrees_0_or_2 && corner_walk && even_cycles; }
};

// Runs every check above on one red set.
PseudotourReport verify_pseudotour(const CrossTable& table, const RedSet& reds);

}  // namespace crosspatch
