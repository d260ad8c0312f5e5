#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compat {

/// Machine-readable failure category carried by every library exception.
enum class ErrorKind {
  Syntax,            // malformed JSON or coordinate text
  NotPermutation,    // labels are not a bijection with 1..n
  GeneralPosition,   // duplicate points or a collinear triple
  SizeMismatch,      // sets disagree on n, or a label is out of range
  InvalidMatching,   // edges share an endpoint or an edge is a loop
  Precondition,      // an operation's size/shape precondition does not hold
  Guard,             // an exhaustive routine was asked for too large an input
  MaxRounds,         // randomized search ran out of rounds
  InfiniteForce,     // point set has no crossing quadruple
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace compat
