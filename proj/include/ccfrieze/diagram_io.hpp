#pragma once

#include <stdexcept>
#include <string>

#include "ccfrieze/diagram.hpp"

namespace ccfrieze {

// Rejected input. line/column are 1-based and set when the position is
// known (JSON syntax errors); both are 0 for semantic problems.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int line_ = 0, int column_ = 0)
      : std::runtime_error(message), line(line_), column(column_) {}
  int line;
  int column;
};

// Diagram file format: a single JSON object
//   {"N": int, "diagonals": [[a, b], ...]}
// Pairs may be unnormalized; edges and duplicates are rejected.
PtolemyDiagram read_diagram_json(const std::string& text);

std::string write_diagram_json(const PtolemyDiagram& d);

}  // namespace ccfrieze
