#include "ccfrieze/cc_map.hpp"

#include <algorithm>
#include <string>

namespace ccfrieze {

namespace {

std::string to_string(Diagonal d) {
  return "{" + std::to_string(d.a) + "," + std::to_string(d.b) + "}";
}

}  // namespace

ExchangeSplit exchange_split(Diagonal m, Diagonal r, Polygon p) {
  if (!crosses(m, r))
    throw std::invalid_argument("exchange_split: " + to_string(m) + " and " +
                                to_string(r) + " do not cross");
  std::array<Vertex, 4> v{m.a, m.b, r.a, r.b};
  std::ranges::sort(v);
  return ExchangeSplit{
      r,
      {normalize(v[0], v[1], p), normalize(v[2], v[3], p)},
      {normalize(v[1], v[2], p), normalize(v[0], v[3], p)},
  };
}

Integer clique_rho(const Cell& cell, Diagonal c) {
  const auto& vs = cell.vertices;
  auto ia = std::ranges::find(vs, c.a);
  auto ib = std::ranges::find(vs, c.b);
  if (ia == vs.end() || ib == vs.end())
    throw std::invalid_argument("clique_rho: endpoint of " + to_string(c) +
                                " is not a cell vertex");
  const int k = int(vs.size());
  int side_a = int(ib - ia + k) % k - 1;  // cell vertices strictly between a and b
  int side_b = k - 2 - side_a;
  if (side_a <= 0 || side_b <= 0)
    throw std::invalid_argument("clique_rho: " + to_string(c) +
                                " is a boundary chord of the cell, not interior");
  return binomial(side_a + side_b, side_a);
}

std::optional<Diagonal> first_crossed_dissecting(Diagonal m,
                                                 const Decomposition& dec,
                                                 Vertex anchor) {
  if (anchor != m.a && anchor != m.b)
    throw std::invalid_argument("anchor " + std::to_string(anchor) +
                                " is not an endpoint of " + to_string(m));
  const Polygon p = dec.polygon;
  std::vector<Diagonal> crossed;
  for (Diagonal r : dec.dissecting)
    if (crosses(m, r)) crossed.push_back(r);
  if (crossed.empty()) return std::nullopt;

  // r is first iff the region it cuts off around the anchor contains no
  // other crossed dissecting diagonal.
  auto in_closed_arc = [&](Vertex x, Vertex u, Vertex v) {
    return p.arc_length(u, x) <= p.arc_length(u, v);
  };
  for (Diagonal r : crossed) {
    Vertex from = r.a, to = r.b;
    if (!p.in_open_arc(anchor, from, to)) std::swap(from, to);
    bool nearest = std::ranges::none_of(crossed, [&](Diagonal other) {
      return other != r && in_closed_arc(other.a, from, to) &&
             in_closed_arc(other.b, from, to);
    });
    if (nearest) return r;
  }
  throw StructureError("dissecting diagonals crossing " + to_string(m) +
                       " have no nearest element from anchor");
}

namespace {

Decomposition validated_decomposition(const PtolemyDiagram& d) {
  if (auto violation = validate(d))
    throw std::invalid_argument(
        "diagram is not Ptolemy-closed: " + to_string(violation->first) +
        " and " + to_string(violation->second) + " cross but " +
        to_string(violation->missing) + " is missing");
  return decompose(d);
}

}  // namespace

RhoComputer::RhoComputer(PtolemyDiagram diagram, Anchor anchor)
    : diagram_(std::move(diagram)),
      decomposition_(validated_decomposition(diagram_)),
      anchor_(anchor) {}

Integer RhoComputer::rho(Diagonal m) {
  if (make_diagonal(m.a, m.b, diagram_.polygon()) != m)
    throw std::invalid_argument("rho: " + to_string(m) +
                                " is not a normalized diagonal of the polygon");
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  Integer value = compute(m);
  memo_.emplace(m, value);
  return value;
}

Integer RhoComputer::compute(Diagonal m) {
  bool crossed_any = std::ranges::any_of(
      diagram_.diagonals(), [&](Diagonal e) { return crosses(m, e); });
  if (!crossed_any) return 1;

  Vertex anchor = anchor_ == Anchor::SmallerEndpoint ? m.a : m.b;
  auto r = first_crossed_dissecting(m, decomposition_, anchor);
  if (!r) {
    // m crosses members but no dissecting diagonal, so it lies inside a
    // single cell, which must be a clique.
    for (const Cell& cell : decomposition_.cells) {
      const auto& vs = cell.vertices;
      auto ia = std::ranges::find(vs, m.a);
      auto ib = std::ranges::find(vs, m.b);
      if (ia == vs.end() || ib == vs.end()) continue;
      int k = int(vs.size());
      int gap = int(ib - ia + k) % k;
      if (gap == 1 || gap == k - 1) continue;  // boundary chord of this cell
      if (cell.kind != CellKind::Clique)
        throw StructureError("diagonal " + to_string(m) +
                             " crosses members inside an empty cell");
      return clique_rho(cell, m);
    }
    throw StructureError("no cell contains " + to_string(m));
  }

  ExchangeSplit split = exchange_split(m, *r, diagram_.polygon());
  return rho_sum(split.a_sides) + rho_sum(split.b_sides);
}

Integer RhoComputer::rho_sum(std::span<const Chord> parts) {
  Integer product = 1;
  for (const Chord& part : parts)
    if (!is_edge(part)) product *= rho(*part);
  return product;
}

RhoTable rho_table(const PtolemyDiagram& d, Anchor anchor) {
  RhoComputer computer(d, anchor);
  RhoTable table{d.polygon(), {}};
  for (Diagonal m : all_diagonals(d.polygon()))
    table.values.emplace(m, computer.rho(m));
  return table;
}

Integer rho(Diagonal m, const PtolemyDiagram& d, Anchor anchor) {
  return RhoComputer(d, anchor).rho(m);
}

}  // namespace ccfrieze
