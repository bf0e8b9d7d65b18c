#pragma once

// Depth-first search over colorable edges with per-square exact-count
// propagation. Edges are branched in ascending id order, red first, which
// makes the emission order lexicographic on the sorted id lists.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "crosspatch/pseudotour.hpp"

namespace crosspatch::detail {

class DegreeSearch {
 public:
  enum class Mode {
    From,     // explore everything at or after the prefix node
    Subtree,  // explore only below the prefix node
    Collect,  // record node prefixes at a fixed depth instead of descending
  };

  DegreeSearch(const CrossTable& table, const std::vector<int>& targets);

  void run_from(const std::string& prefix, std::uint64_t budget, const RedSetSink& sink);
  void run_subtree(const std::string& prefix, const RedSetSink& sink);
  std::vector<std::string> collect(int depth);

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t emitted() const noexcept { return emitted_; }
  bool stopped() const noexcept { return stop_; }

 private:
  enum : std::uint8_t { kUndecided = 0, kRed = 1, kBlue = 2 };

  void reset();
  bool assign(int local, std::uint8_t value);
  bool propagate();
  void undo(std::size_t mark);
  void dfs(std::size_t scan, bool on_prefix);
  void emit();

  const CrossTable& table_;
  std::vector<int> targets_;
  std::vector<EdgeId> edges_;                    // local index -> edge id
  std::vector<std::vector<int>> local_surround_;  // square slot -> local edge indices
  std::vector<std::array<SquareId, 4>> squares_;  // local index -> squares

  std::vector<std::uint8_t> state_;
  std::vector<int> red_;
  std::vector<int> open_;
  std::vector<int> trail_;
  std::vector<SquareId> queue_;
  std::vector<char> queued_;
  bool root_ok_ = true;

  Mode mode_ = Mode::From;
  std::string prefix_;
  std::string path_;
  std::uint64_t budget_ = 0;
  int collect_depth_ = 0;
  std::vector<std::string>* tasks_ = nullptr;
  const RedSetSink* sink_ = nullptr;
  std::uint64_t nodes_ = 0;
  std::uint64_t emitted_ = 0;
  bool stop_ = false;
};

}  // namespace crosspatch::detail
