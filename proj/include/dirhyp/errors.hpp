#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace dirhyp {

/// Malformed hypergraph or coloring text. Line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive search or enumeration would exceed its caller-supplied budget.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input does not satisfy the hypothesis an algorithm relies on. Raised
/// when an algorithm detects the failure mid-run, which certifies that the
/// precondition did not hold.
class ConditionViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural assertion of the 2->1 coloring pipeline failed. `check` names
/// the structural fact (e.g. "core-label-count") that did not hold.
class StructureViolated : public std::runtime_error {
 public:
  StructureViolated(std::string check, const std::string& detail)
      : std::runtime_error(check + ": " + detail), check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

}  // namespace dirhyp
