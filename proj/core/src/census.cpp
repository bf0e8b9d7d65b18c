#include "crosspatch/census.hpp"

#include <chrono>
#include <fstream>
#include <set>

#include "crosspatch/errors.hpp"
#include "crosspatch/symmetry.hpp"

namespace crosspatch {
namespace {

constexpr int kOracleSquareLimit = 36;
constexpr std::uint64_t kSpotCheckStride = 97;

Json header_line() {
  return Json{{"format", "crosspatch-census"}, {"version", kCensusFormatVersion}};
}

// Re-derives 2-regularity and cross-closure from raw knight adjacency and
// midpoint grouping, without the cross table.
bool spot_check(const Board& board, const CrosspatchGraph& g) {
  const std::set<KnightMove> present(g.moves.begin(), g.moves.end());
  for (const Square& s : board.squares()) {
    int degree = 0;
    for (const KnightMove& mv : knight_moves(board, s)) degree += present.count(mv) ? 1 : 0;
    if (degree != 2) return false;
  }
  std::map<Point, int> by_midpoint;
  for (const KnightMove& mv : g.moves) ++by_midpoint[Board::midpoint(move_to_edge(board, mv))];
  for (const auto& [mid, count] : by_midpoint)
    if (count != 2) return false;
  return true;
}

std::pair<int, int> parse_corner(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_m = 0, used_n = 0;
    const int m = std::stoi(text.substr(0, x), &used_m);
    const int n = std::stoi(text.substr(x + 1), &used_n);
    if (used_m != x || used_n != text.size() - x - 1) throw std::invalid_argument(text);
    return {m, n};
  } catch (const std::logic_error&) {
    throw ValidationError("board size must look like 4x4, got '" + text + "'");
  }
}

}  // namespace

CensusRecord compute_census_record(const Board& board, const CensusOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const CrossTable table(board);
  const auto group = symmetry_group(board);

  CensusRecord record;
  record.key = board.descriptor();
  record.board = board;
  record.extended = static_cast<int>(board.squares().size()) > kOracleSquareLimit;

  EnumerationOptions enumeration;
  enumeration.limits.node_budget = options.node_budget;
  enumeration.limits.threads = options.threads;
  try {
    enumerate_pseudotours(table, enumeration, [&](const RedSet& reds) {
      ++record.raw_count;
      if (is_orbit_representative(board, group, reds)) ++record.symmetry_count;
      const PseudotourReport report = verify_pseudotour(table, reds);
      record.even_degrees = record.even_degrees && report.even_degrees;
      record.degrees_0_or_2 = record.degrees_0_or_2 && report.degrees_0_or_2;
      record.corner_walk = record.corner_walk && report.corner_walk;
      record.even_cycles = record.even_cycles && report.even_cycles;
      ++record.cycle_histogram[report.g_cycles];
      if (record.extended && record.raw_count % kSpotCheckStride == 1) {
        if (!spot_check(board, realize_graph(table, reds)))
          throw ConsistencyError("census spot check failed on " + record.key);
        ++record.spot_checked;
      }
      return true;
    });
  } catch (const BudgetExhausted&) {
    record.partial = true;
  }
  if (options.record_runtime)
    record.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                              started)
                            .count();
  return record;
}

bool same_findings(const CensusRecord& lhs, const CensusRecord& rhs) {
  return lhs.key == rhs.key && lhs.partial == rhs.partial && lhs.raw_count == rhs.raw_count &&
         lhs.symmetry_count == rhs.symmetry_count && lhs.cycle_histogram == rhs.cycle_histogram &&
         lhs.even_degrees == rhs.even_degrees && lhs.degrees_0_or_2 == rhs.degrees_0_or_2 && lhs.corner_walk == rhs.corner_walk &&
         lhs.even_cycles == rhs.even_cycles;
}

Json record_to_json(const CensusRecord& record) {
  Json histogram = Json::object();
  for (const auto& [cycles, count] : record.cycle_histogram) histogram[std::to_string(cycles)] = count;
  return Json{{"key", record.key},
              {"board", board_to_json(record.board)},
              {"partial", record.partial},
              {"extended", record.extended},
              {"raw_count", record.raw_count},
              {"symmetry_count", record.symmetry_count},
              {"cycle_histogram", histogram},
              {"spot_checked", record.spot_checked},
              {"flags",
               {{"even_degrees", record.even_degrees},
                {"degrees_0_or_2", record.degrees_0_or_2},
                {"corner_walk", record.corner_walk},
                {"even_cycles", record.even_cycles}}},
              {"runtime_ms", record.runtime_ms},
              {"enumerator_version", record.enumerator_version}};
}

CensusRecord record_from_json(const Json& doc) {
  try {
    CensusRecord record;
    record.key = doc.at("key").get<std::string>();
    record.board = board_from_json(doc.at("board"));
    record.partial = doc.at("partial").get<bool>();
    record.extended = doc.at("extended").get<bool>();
    record.raw_count = doc.at("raw_count").get<std::uint64_t>();
    record.symmetry_count = doc.at("symmetry_count").get<std::uint64_t>();
    for (const auto& [cycles, count] : doc.at("cycle_histogram").items())
      record.cycle_histogram[std::stoul(cycles)] = count.get<std::uint64_t>();
    record.spot_checked = doc.at("spot_checked").get<std::uint64_t>();
    const Json& flags = doc.at("flags");
    record.even_degrees = flags.at("even_degrees").get<bool>();
    record.degrees_0_or_2 = flags.at("degrees_0_or_2").get<bool>();
    record.corner_walk = flags.at("corner_walk").get<bool>();
    record.even_cycles = flags.at("even_cycles").get<bool>();
    record.runtime_ms = doc.at("runtime_ms").get<std::int64_t>();
    record.enumerator_version = doc.at("enumerator_version").get<std::string>();
    if (record.key != record.board.descriptor()) throw CensusError("record key does not match its board");
    std::uint64_t total = 0;
    for (const auto& [cycles, count] : record.cycle_histogram) total += count;
    if (total != record.raw_count) throw CensusError("cycle histogram does not sum to the raw count");
    return record;
  } catch (const nlohmann::json::exception& ex) {
    throw CensusError(std::string("malformed census record: ") + ex.what());
  } catch (const std::logic_error& ex) {
    throw CensusError(std::string("malformed census record: ") + ex.what());
  }
}

BoardRange parse_range(const std::string& from, const std::string& to) {
  const auto [m0, n0] = parse_corner(from);
  const auto [m1, n1] = parse_corner(to);
  if (m0 < 1 || n0 < 1 || m0 > m1 || n0 > n1) throw ValidationError("empty or invalid board range");
  return {m0, n0, m1, n1};
}

std::vector<Board> census_boards(const BoardRange& range) {
  std::vector<Board> boards;
  for (int m = range.min_m; m <= range.max_m; ++m)
    for (int n = range.min_n; n <= range.max_n; ++n) boards.push_back(Board::rectangle(m, n));
  return boards;
}

CensusDatabase::CensusDatabase(std::filesystem::path path) : path_(std::move(path)) {
  const std::string hint = " in " + path_.string() +
                           "; move the file aside or truncate it after the last valid line, then re-run";
  if (!std::filesystem::exists(path_)) {
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw CensusError("cannot create census file " + path_.string());
    out << header_line().dump() << '\n';
    return;
  }
  std::ifstream in(path_, std::ios::binary);
  if (!in) throw CensusError("cannot read census file " + path_.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    Json doc;
    try {
      doc = Json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw CensusError("unparseable line " + std::to_string(number) + hint);
    }
    if (number == 1) {
      if (doc != header_line()) throw CensusError("missing or unsupported census header" + hint);
      continue;
    }
    try {
      CensusRecord record = record_from_json(doc);
      by_key_[record.key] = records_.size();
      records_.push_back(std::move(record));
    } catch (const CensusError& ex) {
      throw CensusError(std::string(ex.what()) + " at line " + std::to_string(number) + hint);
    }
  }
  if (number == 0) throw CensusError("empty census file" + hint);
}

void CensusDatabase::append(const CensusRecord& record) {
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  if (!out) throw CensusError("cannot append to census file " + path_.string());
  out << record_to_json(record).dump() << '\n';
  out.flush();
  by_key_[record.key] = records_.size();
  records_.push_back(record);
}

void run_census(const BoardRange& range, const std::filesystem::path& db, const CensusOptions& options,
                const std::function<void(const CensusRecord&, bool)>& on_record) {
  CensusDatabase database(db);
  for (const Board& board : census_boards(range)) {
    const std::string key = board.descriptor();
    if (database.contains(key)) {
      if (on_record) {
        for (const CensusRecord& r : database.records())
          if (r.key == key) on_record(r, false);
      }
      continue;
    }
    const CensusRecord record = compute_census_record(board, options);
    database.append(record);
    if (on_record) on_record(record, true);
  }
}

}  // namespace crosspatch
