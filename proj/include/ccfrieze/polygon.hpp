#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace ccfrieze {

// Vertex labels are 1-based. Anticlockwise = increasing labels, wrapping
// from N back to 1; all modular arithmetic maps 0 back to N.
using Vertex = int;

// The combinatorial N-gon. No geometry is kept: the polygon is its vertex
// count, and every question about it is answered in label arithmetic.
class Polygon {
 public:
  explicit Polygon(int vertex_count);

  int size() const { return n_; }
  int diagonal_count() const { return n_ * (n_ - 3) / 2; }

  bool valid_vertex(Vertex v) const { return 1 <= v && v <= n_; }

  Vertex next(Vertex v) const { return v % n_ + 1; }
  Vertex prev(Vertex v) const { return (v + n_ - 2) % n_ + 1; }

  // Anticlockwise distance from u to v, in 0..N-1.
  int arc_length(Vertex u, Vertex v) const { return (v - u + n_) % n_; }

  // True iff x lies strictly between u and v, walking anticlockwise.
  bool in_open_arc(Vertex x, Vertex u, Vertex v) const {
    int dx = arc_length(u, x);
    return 0 < dx && dx < arc_length(u, v);
  }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  int n_;
};

// A chord {a,b} of the polygon that is not an edge, stored normalized:
// 1 <= a < b <= N and 2 <= b-a <= N-2.
struct Diagonal {
  Vertex a = 0;
  Vertex b = 0;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

// A chord is either a proper diagonal or a boundary edge. Edges carry no
// payload: downstream they stand for the zero object and contribute a
// factor of 1 to rho.
using Chord = std::optional<Diagonal>;

inline bool is_edge(const Chord& c) { return !c.has_value(); }

// Sorts a raw endpoint pair and classifies it; edges come back as an empty
// chord. Equal or out-of-range labels throw std::invalid_argument.
Chord normalize(Vertex x, Vertex y, Polygon p);

// normalize restricted to proper diagonals; edges are rejected as well.
Diagonal make_diagonal(Vertex x, Vertex y, Polygon p);

// True iff the two diagonals cross in the interior of the polygon. A
// diagonal never crosses itself, and diagonals sharing an endpoint never
// cross. Both inputs must be normalized against the same polygon.
bool crosses(Diagonal d1, Diagonal d2);

// The suspension: rotate one step clockwise, i.e. subtract 1 from both
// endpoints mod N. Applying it N times is the identity.
Diagonal suspend(Diagonal d, Polygon p);

// Every diagonal of the polygon, lexicographically.
std::vector<Diagonal> all_diagonals(Polygon p);

// True iff walking anticlockwise one full turn from seq[0] meets the listed
// labels in order. Consecutive labels may coincide except at the pair
// indices named in strict_positions (index i = pair seq[i], seq[i+1]).
bool cyclic_weakly_ordered(std::span<const Vertex> seq, Polygon p,
                           std::span<const int> strict_positions = {});

}  // namespace ccfrieze
