#pragma once

#include <stdexcept>
#include <string>

namespace iop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyPolytope : Error {
  EmptyPolytope() : Error("polytope is empty") {}
};

struct UnboundedPolytope : Error {
  UnboundedPolytope() : Error("polytope is unbounded") {}
};

struct DegenerateArrangement : Error {
  DegenerateArrangement() : Error("arrangement contains the degenerate hyperplane") {}
};

struct FlatNotInPoset : Error {
  FlatNotInPoset() : Error("flat is not an element of the intersection poset") {}
};

struct NotTransverse : Error {
  NotTransverse() : Error("arrangement is not transverse to the polytope") {}
};

struct EqualForms : Error {
  explicit EqualForms(const std::string& what) : Error(what) {}
};

struct ClutterViolation : Error {
  explicit ClutterViolation(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Input text could not be parsed; `line` is 1-based (0 when not applicable).
struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  int line;
};

/// An oracle cross-check disagreed with the engine.
struct CheckFailed : Error {
  explicit CheckFailed(const std::string& what) : Error(what) {}
};

}  // namespace iop
