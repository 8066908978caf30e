#pragma once

#include <vector>

#include "ccfrieze/diagram.hpp"
#include "ccfrieze/integer.hpp"

namespace ccfrieze {

// Independent recomputation of rho by counting subfunctor supports. Nothing
// here shares code with the exchange recursion: the two paths are compared
// diagram-by-diagram in the tests.

// The diagram members crossing c, lexicographically: the objects on which
// Hom(-, Σc) restricted to the diagram is nonzero.
std::vector<Diagonal> support(Diagonal c, const PtolemyDiagram& d);

// True iff morphisms s -> r -> Σc with nonzero composite exist. Some
// labeling of the endpoints must satisfy the anticlockwise chain
//   s0, r0, c0-1, s1-2, s1, r1, c1-1, s0-2
// (weak order; the -2 offsets already encode the strict steps). All eight
// labelings are tried. Both s and r must cross c.
bool composite_nonzero(Diagonal s, Diagonal r, Diagonal c, Polygon p);

// Counts the subsets of support(c) closed under nonzero precomposition:
// whenever r is in the subset and composite_nonzero(s, r, c), s is too.
// The empty set and the full support always qualify. Supports larger than
// 25 raise GuardError.
Integer count_subfunctors(Diagonal c, const PtolemyDiagram& d);

// The grid spanned by the support of a clique diagonal: a and b count grid
// points along the two axes.
struct StaircaseRectangle {
  int a = 0;
  int b = 0;
};

// Upper edges of staircases in the extended rectangle: C(a+b, a), one per
// permutation of a "down" letters and b "right" letters.
Integer staircase_count(StaircaseRectangle rect);

// Checks (1/(k+1)) C(n,k) C(n+1,k) == C(n,k)^2 - C(n,k-1) C(n,k+1) as exact
// integers. Requires 0 < k < n.
bool narayana_identity_check(int n, int k);

}  // namespace ccfrieze
