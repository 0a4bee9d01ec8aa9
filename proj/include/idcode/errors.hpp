#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace idcode {

// Base class for all domain errors thrown by this library. Programmer errors
// (bad indices, mismatched universes) use the std exception types instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The digraph has twins, so no separating or identifying code exists.
class TwinsError : public Error {
 public:
  TwinsError(int u_, int v_)
      : Error("twins exist: vertices " + std::to_string(u_) + " and " +
              std::to_string(v_) + " have equal in-balls"),
        u(u_),
        v(v_) {}
  int u;
  int v;
};

// The bipartite instance admits no S-separating / S-discriminating code.
class NotIdentifiableError : public Error {
 public:
  NotIdentifiableError(int s1, int s2)
      : Error("not identifiable: S-vertices " + std::to_string(s1) + " and " +
              std::to_string(s2) + " have equal neighborhoods"),
        unseparated(std::make_pair(s1, s2)) {}
  explicit NotIdentifiableError(int s)
      : Error("not identifiable: S-vertex " + std::to_string(s) +
              " has an empty neighborhood"),
        undominated(s) {}
  std::optional<std::pair<int, int>> unseparated;
  std::optional<int> undominated;
};

// The digraph is not a transitive closure of a rooted oriented forest.
class NotInFamilyError : public Error {
 public:
  NotInFamilyError() : Error("digraph is not in the closure family") {}
};

// An instance-size guard was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

// A documented operation precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A construction the theory guarantees to succeed failed; indicates a bug
// (or a counterexample to the theorem being exercised).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. `line` is 1-based; 0 means not line-oriented (JSON).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, int line_ = 0)
      : Error(line_ > 0 ? msg + " at line " + std::to_string(line_) : msg),
        line(line_) {}
  int line;
};

}  // namespace idcode
