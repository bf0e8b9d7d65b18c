#pragma once

// JSON documents exchanged by the command-line tool:
//   Board       {"topology", "m", "n", "removed": [[i, j], ...]}
//   Pseudotour  {"board", "reds": [[a, b, "N"|"E"], ...], "cycles": [[[i, j], ...], ...]}
//   Witness     Pseudotour plus {"kind": "closed"|"open", "endpoints": [...], "path": [...]}

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crosspatch/cross_graph.hpp"
#include "crosspatch/tour_search.hpp"

namespace crosspatch {

using Json = nlohmann::ordered_json;

Json board_to_json(const Board& board);
Board board_from_json(const Json& doc);

Json square_to_json(Square s);
Square square_from_json(const Json& doc);
Json edge_to_json(const BoardEdge& e);
BoardEdge edge_from_json(const Json& doc);

// Cycles are included when every square has degree 0 or 2.
Json pseudotour_to_json(const CrossTable& table, const RedSet& reds);
Json witness_to_json(const CrossTable& table, const TourWitness& witness);
Json counterexample_to_json(const OddDegreeCounterexample& ce);
Json report_to_json(const PseudotourReport& report);

struct PseudotourDocument {
  Board board;
  RedSet reds;
  std::optional<TourWitness> witness;
};

// Accepts pseudotour, witness and counterexample documents. Throws
// ValidationError on malformed input.
PseudotourDocument document_from_json(const Json& doc);

}  // namespace crosspatch
