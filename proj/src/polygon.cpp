#include "ccfrieze/polygon.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ccfrieze {

Polygon::Polygon(int vertex_count) : n_(vertex_count) {
  if (n_ < 4)
    throw std::invalid_argument("polygon needs at least 4 vertices, got " +
                                std::to_string(n_));
}

Chord normalize(Vertex x, Vertex y, Polygon p) {
  if (!p.valid_vertex(x) || !p.valid_vertex(y))
    throw std::invalid_argument("vertex label out of range 1.." +
                                std::to_string(p.size()) + ": {" +
                                std::to_string(x) + "," + std::to_string(y) + "}");
  if (x == y)
    throw std::invalid_argument("chord endpoints coincide: " + std::to_string(x));
  auto [a, b] = std::minmax(x, y);
  if (b - a == 1 || b - a == p.size() - 1) return std::nullopt;  // edge
  return Diagonal{a, b};
}

Diagonal make_diagonal(Vertex x, Vertex y, Polygon p) {
  Chord c = normalize(x, y, p);
  if (is_edge(c))
    throw std::invalid_argument("{" + std::to_string(x) + "," + std::to_string(y) +
                                "} is an edge of the " + std::to_string(p.size()) +
                                "-gon, not a diagonal");
  return *c;
}

bool crosses(Diagonal d1, Diagonal d2) {
  return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) ||
         (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

Diagonal suspend(Diagonal d, Polygon p) {
  return *normalize(p.prev(d.a), p.prev(d.b), p);
}

std::vector<Diagonal> all_diagonals(Polygon p) {
  std::vector<Diagonal> out;
  out.reserve(p.diagonal_count());
  for (Vertex a = 1; a <= p.size(); ++a)
    for (Vertex b = a + 2; b <= p.size(); ++b)
      if (b - a <= p.size() - 2) out.push_back(Diagonal{a, b});
  return out;
}

bool cyclic_weakly_ordered(std::span<const Vertex> seq, Polygon p,
                           std::span<const int> strict_positions) {
  if (seq.empty()) throw std::invalid_argument("empty vertex sequence");
  for (Vertex v : seq)
    if (!p.valid_vertex(v))
      throw std::invalid_argument("vertex label out of range: " + std::to_string(v));
  int prev_off = 0;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    int off = p.arc_length(seq[0], seq[i]);
    bool strict = std::ranges::find(strict_positions, int(i) - 1) !=
                  strict_positions.end();
    if (off < prev_off || (strict && off == prev_off)) return false;
    prev_off = off;
  }
  return true;
}

}  // namespace ccfrieze
