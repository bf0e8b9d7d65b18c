#pragma once

// Pseudotour census over a range of rectangular boards, persisted as
// line-delimited JSON. The first line of the file is a version header; every
// further line is one record keyed by the board descriptor.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "crosspatch/json_io.hpp"

namespace crosspatch {

inline constexpr int kCensusFormatVersion = 1;
inline constexpr const char* kEnumeratorVersion = "1";

class CensusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusRecord {
  std::string key;
  Board board = Board::rectangle(1, 1);
  bool partial = false;
  bool extended = false;  // too large for the exhaustive two-factor cross-check
  std::uint64_t raw_count = 0;
  std::uint64_t symmetry_count = 0;
  std::map<std::size_t, std::uint64_t> cycle_histogram;
  std::uint64_t spot_checked = 0;
  bool even_degrees = true;
  bool degrees_0_or_2 = true;
  bool corner_walk = true;
  bool even_cycles = true;
  std::int64_t runtime_ms = 0;
  std::string enumerator_version = kEnumeratorVersion;
};

struct CensusOptions {
  std::uint64_t node_budget = 0;  // per board; 0 = unlimited
  unsigned threads = 1;
  bool record_runtime = true;
};

CensusRecord compute_census_record(const Board& board, const CensusOptions& options);

// Counts, histogram and flags agree (runtime and spot-check tally ignored).
bool same_findings(const CensusRecord& lhs, const CensusRecord& rhs);

Json record_to_json(const CensusRecord& record);
CensusRecord record_from_json(const Json& doc);

struct BoardRange {
  int min_m = 1, min_n = 1, max_m = 1, max_n = 1;
};

// "AxB" and "CxD" corners, inclusive.
BoardRange parse_range(const std::string& from, const std::string& to);
std::vector<Board> census_boards(const BoardRange& range);

class CensusDatabase {
 public:
  // Creates the file with its header when missing; throws CensusError if the
  // existing file is not a valid census.
  explicit CensusDatabase(std::filesystem::path path);

  bool contains(const std::string& key) const { return by_key_.count(key) != 0; }
  const std::vector<CensusRecord>& records() const noexcept { return records_; }
  void append(const CensusRecord& record);

 private:
  std::filesystem::path path_;
  std::vector<CensusRecord> records_;
  std::map<std::string, std::size_t> by_key_;
};

// Computes and appends one record per board not already in the database, in
// canonical board order. `on_record` sees every record, fresh or stored.
void run_census(const BoardRange& range, const std::filesystem::path& db, const CensusOptions& options,
                const std::function<void(const CensusRecord&, bool fresh)>& on_record = {});

}  // namespace crosspatch
