#pragma once

#include <array>
#include <map>
#include <span>

#include "ccfrieze/diagram.hpp"
#include "ccfrieze/integer.hpp"

namespace ccfrieze {

// Which endpoint of m the exchange recursion walks from. The computed value
// is the same either way (see the anchor-independence property tests); the
// anchor only pins a deterministic recursion tree.
enum class Anchor { SmallerEndpoint, LargerEndpoint };

// The two pairs of opposite sides of the quadrilateral spanned by a
// crossing pair m, r. With the four corners sorted v0 < v1 < v2 < v3, the
// a-pair is {v0,v1}, {v2,v3} and the b-pair is {v1,v2}, {v0,v3}. Sides that
// are polygon edges appear as empty chords.
struct ExchangeSplit {
  Diagonal crossed;  // r
  std::array<Chord, 2> a_sides;
  std::array<Chord, 2> b_sides;
};

ExchangeSplit exchange_split(Diagonal m, Diagonal r, Polygon p);

// rho of an interior diagonal of a clique cell: C(a+b, a) where a and b
// count the cell vertices strictly on either side of c.
Integer clique_rho(const Cell& cell, Diagonal c);

// Among the dissecting diagonals crossing m (pairwise non-crossing, hence
// linearly ordered along m), the one met first when walking from the anchor
// endpoint; nullopt when m crosses none.
std::optional<Diagonal> first_crossed_dissecting(Diagonal m,
                                                 const Decomposition& dec,
                                                 Vertex anchor);

// Memoized evaluator of the generalized Caldero-Chapoton map for one fixed
// diagram. rho(m) follows the inductive exchange procedure:
//   - m crosses no member            -> 1
//   - m interior to a clique cell    -> clique_rho
//   - otherwise, with r the first crossed dissecting diagonal,
//     rho(m) = rho(a')rho(a'') + rho(b')rho(b'') over the exchange split.
// Construction rejects diagrams that fail validate().
class RhoComputer {
 public:
  explicit RhoComputer(PtolemyDiagram diagram,
                       Anchor anchor = Anchor::SmallerEndpoint);

  Integer rho(Diagonal m);

  // rho of a direct sum: the product over the parts, edges contributing 1.
  // The empty list is the zero object, rho = 1.
  Integer rho_sum(std::span<const Chord> parts);

  const PtolemyDiagram& diagram() const { return diagram_; }
  const Decomposition& decomposition() const { return decomposition_; }

 private:
  Integer compute(Diagonal m);

  PtolemyDiagram diagram_;
  Decomposition decomposition_;
  Anchor anchor_;
  std::map<Diagonal, Integer> memo_;
};

// rho on every diagonal of the polygon, including the diagram's own members
// (dissecting diagonals get 1, clique diagonals their binomial).
struct RhoTable {
  Polygon polygon;
  std::map<Diagonal, Integer> values;
};

RhoTable rho_table(const PtolemyDiagram& d,
                   Anchor anchor = Anchor::SmallerEndpoint);

// One-shot convenience; builds a throwaway computer.
Integer rho(Diagonal m, const PtolemyDiagram& d,
            Anchor anchor = Anchor::SmallerEndpoint);

}  // namespace ccfrieze
