#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace crosspatch {

// A square, vertex, or edge that does not exist on the board it was used with.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidBoard : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedTopology : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A graph that was required to be 2-regular is not.
class NotAPseudotour : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// H has a vertex whose degree prevents a decomposition into simple cycles.
class StructureError : public std::runtime_error {
 public:
  StructureError(const std::string& what, int vertex_a, int vertex_b)
      : std::runtime_error(what), vertex_a_(vertex_a), vertex_b_(vertex_b) {}
  int vertex_a() const noexcept { return vertex_a_; }
  int vertex_b() const noexcept { return vertex_b_; }

 private:
  int vertex_a_;
  int vertex_b_;
};

// Two independent computations of the same quantity disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The search ran out of nodes. Everything before `cursor` in canonical order
// has already been delivered; resuming from `cursor` yields the rest.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(std::string cursor, std::uint64_t nodes, std::uint64_t emitted)
      : std::runtime_error("node budget exhausted"),
        cursor_(std::move(cursor)),
        nodes_(nodes),
        emitted_(emitted) {}
  const std::string& cursor() const noexcept { return cursor_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t emitted() const noexcept { return emitted_; }

 private:
  std::string cursor_;
  std::uint64_t nodes_;
  std::uint64_t emitted_;
};

}  // namespace crosspatch
