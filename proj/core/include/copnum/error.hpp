#pragma once

#include <stdexcept>
#include <string>

namespace copnum {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that requires a connected graph was given a disconnected one.
class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is not connected") {}
};

/// A state space or graph would exceed a configured size limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// No k <= k_max cops win on the graph.
class ExceedsKMax : public Error {
 public:
  explicit ExceedsKMax(int k_max)
      : Error("cop number exceeds k_max = " + std::to_string(k_max)), k_max_(k_max) {}
  int k_max() const noexcept { return k_max_; }

 private:
  int k_max_;
};

/// A strategy was requested for a state or graph the cops do not win.
class NotCopWin : public Error {
 public:
  using Error::Error;
};

}  // namespace copnum
