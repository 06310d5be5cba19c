#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpot/numeric.hpp"

namespace qpot {

// Domain error with a stable machine-readable kind ("NotSaturated",
// "InconsistentConstraints", ...). The CLI maps kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class NotSaturatedError : public Error {
 public:
  NotSaturatedError(const std::string& msg, IntVec torsion)
      : Error("NotSaturated", msg), torsion_(std::move(torsion)) {}
  const IntVec& torsion() const { return torsion_; }

 private:
  IntVec torsion_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("ParseError",
              msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qpot
