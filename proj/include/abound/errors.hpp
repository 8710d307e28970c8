#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abound {

// Certificate function fails the negativity condition on the lower interval.
class InfeasibleCertificate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No optimizer restart reached a feasible certificate.
class NoFeasiblePoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotRegular : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownName : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A complete classification would need more vertices than the budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, long required)
      : std::runtime_error(what), required_(required) {}
  long required() const noexcept { return required_; }

 private:
  long required_;
};

// Malformed graph6 input; offset is the 0-based byte position of the problem.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace abound
