#include "degree_search.hpp"

#include "crosspatch/errors.hpp"

namespace crosspatch::detail {

DegreeSearch::DegreeSearch(const CrossTable& table, const std::vector<int>& targets)
    : table_(table), targets_(targets) {
  const auto slots = static_cast<std::size_t>(table.board().square_slots());
  if (targets_.size() != slots) throw std::invalid_argument("one target per square slot expected");
  edges_ = table.colorable_edges();
  local_surround_.resize(slots);
  squares_.reserve(edges_.size());
  for (std::size_t local = 0; local < edges_.size(); ++local) {
    squares_.push_back(table.squares_of(edges_[local]));
    for (const SquareId sq : squares_.back())
      if (targets_[static_cast<std::size_t>(sq)] >= 0)
        local_surround_[static_cast<std::size_t>(sq)].push_back(static_cast<int>(local));
  }
  state_.resize(edges_.size());
  red_.resize(slots);
  open_.resize(slots);
  queued_.resize(slots);
}

void DegreeSearch::reset() {
  std::fill(state_.begin(), state_.end(), kUndecided);
  std::fill(red_.begin(), red_.end(), 0);
  std::fill(queued_.begin(), queued_.end(), 0);
  trail_.clear();
  queue_.clear();
  path_.clear();
  nodes_ = emitted_ = 0;
  stop_ = false;
  for (std::size_t sq = 0; sq < open_.size(); ++sq) {
    open_[sq] = static_cast<int>(local_surround_[sq].size());
    if (targets_[sq] >= 0) {
      queue_.push_back(static_cast<SquareId>(sq));
      queued_[sq] = 1;
    }
  }
  root_ok_ = propagate();
}

bool DegreeSearch::assign(int local, std::uint8_t value) {
  auto& cell = state_[static_cast<std::size_t>(local)];
  if (cell != kUndecided) return cell == value;
  cell = value;
  trail_.push_back(local);
  for (const SquareId sq : squares_[static_cast<std::size_t>(local)]) {
    const auto s = static_cast<std::size_t>(sq);
    if (targets_[s] < 0) continue;
    --open_[s];
    if (value == kRed) ++red_[s];
    if (!queued_[s]) {
      queued_[s] = 1;
      queue_.push_back(sq);
    }
  }
  return true;
}

bool DegreeSearch::propagate() {
  bool ok = true;
  while (ok && !queue_.empty()) {
    const auto s = static_cast<std::size_t>(queue_.back());
    queue_.pop_back();
    queued_[s] = 0;
    const int target = targets_[s];
    const int red = red_[s];
    const int open = open_[s];
    if (red > target || red + open < target) {
      ok = false;
    } else if (open > 0 && (red == target || red + open == target)) {
      const std::uint8_t forced = red == target ? kBlue : kRed;
      for (const int local : local_surround_[s])
        if (state_[static_cast<std::size_t>(local)] == kUndecided) assign(local, forced);
    }
  }
  for (const SquareId sq : queue_) queued_[static_cast<std::size_t>(sq)] = 0;
  queue_.clear();
  return ok;
}

void DegreeSearch::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    const int local = trail_.back();
    trail_.pop_back();
    auto& cell = state_[static_cast<std::size_t>(local)];
    for (const SquareId sq : squares_[static_cast<std::size_t>(local)]) {
      const auto s = static_cast<std::size_t>(sq);
      if (targets_[s] < 0) continue;
      ++open_[s];
      if (cell == kRed) --red_[s];
    }
    cell = kUndecided;
  }
}

void DegreeSearch::emit() {
  if (mode_ == Mode::Collect) {
    tasks_->push_back(path_);
    return;
  }
  RedSet reds;
  for (std::size_t local = 0; local < edges_.size(); ++local)
    if (state_[local] == kRed) reds.edges.push_back(edges_[local]);
  ++emitted_;
  if (!(*sink_)(reds)) stop_ = true;
}

void DegreeSearch::dfs(std::size_t scan, bool on_prefix) {
  while (scan < edges_.size() && state_[scan] != kUndecided) ++scan;
  if (scan == edges_.size()) {
    emit();
    return;
  }
  const std::size_t depth = path_.size();
  if (mode_ == Mode::Collect && depth == static_cast<std::size_t>(collect_depth_)) {
    tasks_->push_back(path_);
    return;
  }
  const bool follow = on_prefix && depth < prefix_.size();
  // Ancestors of the resume cursor were paid for by an earlier run.
  if (!follow) {
    ++nodes_;
    if (budget_ != 0 && nodes_ > budget_) throw BudgetExhausted(path_, nodes_ - 1, emitted_);
  }

  const char wanted = follow ? prefix_[depth] : '\0';
  for (const std::uint8_t value : {kRed, kBlue}) {
    const char code = value == kRed ? '1' : '0';
    if (follow) {
      if (wanted == '0' && value == kRed) continue;
      if (mode_ == Mode::Subtree && wanted != code) continue;
    }
    const std::size_t mark = trail_.size();
    path_.push_back(code);
    if (assign(static_cast<int>(scan), value) && propagate()) dfs(scan + 1, follow && wanted == code);
    undo(mark);
    path_.pop_back();
    if (stop_) return;
  }
}

void DegreeSearch::run_from(const std::string& prefix, std::uint64_t budget, const RedSetSink& sink) {
  if (prefix.find_first_not_of("01") != std::string::npos)
    throw std::invalid_argument("resume cursor must consist of '0' and '1'");
  reset();
  mode_ = Mode::From;
  prefix_ = prefix;
  budget_ = budget;
  sink_ = &sink;
  if (root_ok_) dfs(0, true);
}

void DegreeSearch::run_subtree(const std::string& prefix, const RedSetSink& sink) {
  reset();
  mode_ = Mode::Subtree;
  prefix_ = prefix;
  budget_ = 0;
  sink_ = &sink;
  if (root_ok_) dfs(0, true);
}

std::vector<std::string> DegreeSearch::collect(int depth) {
  reset();
  std::vector<std::string> tasks;
  mode_ = Mode::Collect;
  prefix_.clear();
  budget_ = 0;
  collect_depth_ = depth;
  tasks_ = &tasks;
  if (root_ok_) dfs(0, false);
  tasks_ = nullptr;
  return tasks;
}

}  // namespace crosspatch::detail
