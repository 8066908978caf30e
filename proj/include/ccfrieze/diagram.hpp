#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ccfrieze/polygon.hpp"

namespace ccfrieze {

// Thrown when a combinatorial-blowup guard trips (diagram enumeration,
// oracle support size).
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency trap: a cell whose interior diagonals are only
// partially present in the diagram. Cannot occur once validate() passed.
struct StructureError : std::logic_error {
  using std::logic_error::logic_error;
};

// A polygon together with a finite set of its diagonals. The set is kept
// sorted and duplicate-free; the Ptolemy closure property is checked
// separately by validate().
class PtolemyDiagram {
 public:
  PtolemyDiagram(Polygon p, std::vector<Diagonal> diagonals);

  Polygon polygon() const { return polygon_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  bool contains(Diagonal d) const;

  friend bool operator==(const PtolemyDiagram&, const PtolemyDiagram&) = default;

 private:
  Polygon polygon_;
  std::vector<Diagonal> diagonals_;
};

struct ClosureViolation {
  Diagonal first;    // these two members cross ...
  Diagonal second;
  Diagonal missing;  // ... but this side of their quadrilateral is absent
  friend bool operator==(const ClosureViolation&, const ClosureViolation&) = default;
};

// Checks the Ptolemy rule: whenever two members cross, every side of their
// quadrilateral that is a diagonal must be a member too. Returns the first
// violation in lexicographic scan order, or nullopt when the set is closed.
std::optional<ClosureViolation> validate(const PtolemyDiagram& d);

// Smallest closed superset of the seed; extensive and idempotent.
PtolemyDiagram ptolemy_closure(Polygon p, std::vector<Diagonal> seed);

enum class CellKind { Empty, Clique };

// A subpolygon cut out by the dissecting diagonals. Vertices are stored in
// cyclic order starting from the smallest label, which makes the list
// ascending. A triangle is always Empty.
struct Cell {
  std::vector<Vertex> vertices;
  CellKind kind = CellKind::Empty;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Chords between non-adjacent vertices of the cell, lexicographically.
std::vector<Diagonal> interior_chords(const Cell& cell, Polygon p);

struct Decomposition {
  Polygon polygon;
  std::vector<Diagonal> dissecting;  // members that cross no other member
  std::vector<Cell> cells;           // sorted by vertex list
};

// Splits the polygon along the dissecting diagonals and classifies each
// cell Empty or Clique. Requires a closed diagram; a mixed cell raises
// StructureError.
Decomposition decompose(const PtolemyDiagram& d);

// Rotates the whole diagram one step clockwise.
PtolemyDiagram suspend(const PtolemyDiagram& d);

// Every closed diagonal set of the polygon, exactly once, in increasing
// order of the characteristic bitmask over all_diagonals(p). Guarded to
// N <= 9 (at most 2^27 candidate subsets).
void enumerate_ptolemy(Polygon p,
                       const std::function<void(const PtolemyDiagram&)>& yield);

std::vector<PtolemyDiagram> all_ptolemy_diagrams(Polygon p);

}  // namespace ccfrieze
