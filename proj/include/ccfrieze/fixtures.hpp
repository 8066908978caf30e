#pragma once

#include <iosfwd>

#include "ccfrieze/diagram.hpp"

namespace ccfrieze::fixtures {

// Worked examples bundled with the library. Each has outputs known in
// closed form, so together they double as a quick self-test (`examples`
// subcommand) and as regression data for the test suites.

// Octagon dissected by {2,4}, {1,5}, {5,8} with the quadrilateral clique
// {1,2,4,5}: diagonals {2,4},{2,5},{1,4},{1,5},{5,8}.
PtolemyDiagram octagon_quad_clique();

// Octagon with dissecting {2,6}, {4,6} and the pentagon clique {6,7,8,1,2}:
// diagonals {2,6},{2,7},{2,8},{4,6},{6,8},{1,6},{1,7}.
PtolemyDiagram octagon_pentagon_clique();

// Every diagonal present: one big clique.
PtolemyDiagram full_clique(int vertices);

// Fan triangulation of the pentagon: {1,3},{1,4}.
PtolemyDiagram pentagon_fan();

PtolemyDiagram empty_diagram(int vertices);

// Recomputes every bundled example and prints one PASS/FAIL line each.
// Returns true when all pass.
bool run_examples(std::ostream& out);

}  // namespace ccfrieze::fixtures
