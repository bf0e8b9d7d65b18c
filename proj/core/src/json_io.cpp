#include "crosspatch/json_io.hpp"

#include "crosspatch/errors.hpp"

namespace crosspatch {
namespace {

Topology topology_from_name(const std::string& name) {
  if (name == "rectangle") return Topology::Rectangle;
  if (name == "cylinder_x") return Topology::CylinderX;
  if (name == "cylinder_y") return Topology::CylinderY;
  if (name == "torus") return Topology::Torus;
  if (name == "subset") return Topology::SquareSubset;
  throw ValidationError("unknown topology '" + name + "'");
}

Json squares_to_json(const std::vector<Square>& squares) {
  Json out = Json::array();
  for (const Square& s : squares) out.push_back(square_to_json(s));
  return out;
}

}  // namespace

Json board_to_json(const Board& board) {
  Json removed = Json::array();
  for (const Square& s : board.removed()) removed.push_back(square_to_json(s));
  return Json{{"topology", topology_name(board.topology())},
              {"m", board.width()},
              {"n", board.height()},
              {"removed", removed}};
}

Board board_from_json(const Json& doc) {
  try {
    std::vector<Square> removed;
    if (doc.contains("removed"))
      for (const Json& s : doc.at("removed")) removed.push_back(square_from_json(s));
    return Board(topology_from_name(doc.at("topology").get<std::string>()), doc.at("m").get<int>(),
                 doc.at("n").get<int>(), std::move(removed));
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed board: ") + ex.what());
  } catch (const InvalidBoard& ex) {
    throw ValidationError(ex.what());
  }
}

Json square_to_json(Square s) { return Json::array({s.i, s.j}); }

Square square_from_json(const Json& doc) {
  if (!doc.is_array() || doc.size() != 2) throw ValidationError("a square is written [i, j]");
  return {doc[0].get<int>(), doc[1].get<int>()};
}

Json edge_to_json(const BoardEdge& e) {
  return Json::array({e.anchor.a, e.anchor.b, e.dir == EdgeDir::N ? "N" : "E"});
}

BoardEdge edge_from_json(const Json& doc) {
  if (!doc.is_array() || doc.size() != 3) throw ValidationError("a board edge is written [a, b, \"N\"|\"E\"]");
  const std::string dir = doc[2].get<std::string>();
  if (dir != "N" && dir != "E") throw ValidationError("board edge direction must be N or E");
  return {{doc[0].get<int>(), doc[1].get<int>()}, dir == "N" ? EdgeDir::N : EdgeDir::E};
}

Json pseudotour_to_json(const CrossTable& table, const RedSet& reds) {
  const Board& board = table.board();
  Json edges = Json::array();
  for (const BoardEdge& e : red_edges(board, reds)) edges.push_back(edge_to_json(e));
  Json cycles = Json::array();
  const CrosspatchGraph g = realize_graph(table, reds);
  const bool cyclic = std::all_of(g.degree.begin(), g.degree.end(), [](int d) { return d == 0 || d == 2; });
  if (cyclic)
    for (const auto& cycle : cycle_decomposition(board, g).cycles) cycles.push_back(squares_to_json(cycle));
  return Json{{"board", board_to_json(board)}, {"reds", edges}, {"cycles", cycles}};
}

Json witness_to_json(const CrossTable& table, const TourWitness& witness) {
  Json doc = pseudotour_to_json(table, witness.reds);
  doc["kind"] = tour_kind_name(witness.kind);
  Json ends = Json::array();
  if (witness.endpoints) {
    ends.push_back(square_to_json(witness.endpoints->first));
    ends.push_back(square_to_json(witness.endpoints->second));
  }
  doc["endpoints"] = ends;
  doc["path"] = squares_to_json(witness.sequence);
  return doc;
}

Json counterexample_to_json(const OddDegreeCounterexample& ce) {
  Json doc = pseudotour_to_json(CrossTable(ce.board), ce.reds);
  doc["odd_vertex"] = Json::array({ce.vertex.a, ce.vertex.b});
  return doc;
}

Json report_to_json(const PseudotourReport& report) {
  Json histogram = Json::object();
  for (const auto& [degree, count] : report.h_degree_histogram) histogram[std::to_string(degree)] = count;
  Json sigmas = Json::array();
  for (const auto& s : report.sigmas) sigmas.push_back(s.to_string());
  Json doc{{"pass", report.pass()},
           {"cross_closed", report.cross_closed},
           {"pseudotour", report.pseudotour},
           {"even_h_degrees", report.even_degrees},
           {"h_degrees_0_or_2", report.degrees_0_or_2},
           {"corner_walk", report.corner_walk},
           {"even_cycle_count", report.even_cycles},
           {"g_cycles", report.g_cycles},
           {"h_cycles", report.h_cycles},
           {"h_degree_histogram", histogram},
           {"sigma", sigmas}};
  if (report.odd_vertex) doc["odd_vertex"] = Json::array({report.odd_vertex->a, report.odd_vertex->b});
  doc["problems"] = report.problems;
  return doc;
}

PseudotourDocument document_from_json(const Json& doc) {
  try {
    PseudotourDocument out{board_from_json(doc.at("board")), {}, std::nullopt};
    std::vector<BoardEdge> edges;
    for (const Json& e : doc.at("reds")) edges.push_back(edge_from_json(e));
    for (const BoardEdge& e : edges)
      if (!out.board.has_edge(e)) throw ValidationError("red edge is not on the board");
    out.reds = make_red_set(out.board, edges);
    if (out.reds.edges.size() != edges.size()) throw ValidationError("red edge listed twice");

    if (doc.contains("kind")) {
      TourWitness w;
      const std::string kind = doc.at("kind").get<std::string>();
      if (kind != "closed" && kind != "open") throw ValidationError("kind must be closed or open");
      w.kind = kind == "closed" ? TourKind::Closed : TourKind::Open;
      w.reds = out.reds;
      for (const Json& s : doc.at("path")) w.sequence.push_back(square_from_json(s));
      const Json& ends = doc.at("endpoints");
      if (w.kind == TourKind::Open) {
        if (ends.size() != 2) throw ValidationError("open witness needs two endpoints");
        w.endpoints = std::make_pair(square_from_json(ends[0]), square_from_json(ends[1]));
      } else {
        w.cycle_count = doc.at("cycles").size();
      }
      out.witness = std::move(w);
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed document: ") + ex.what());
  }
}

}  // namespace crosspatch
