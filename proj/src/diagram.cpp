#include "ccfrieze/diagram.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

namespace ccfrieze {

namespace {

std::string to_string(Diagonal d) {
  return "{" + std::to_string(d.a) + "," + std::to_string(d.b) + "}";
}

// The four sides of the quadrilateral spanned by a crossing pair, in the
// order the closure rule lists them: {a1,b1}, {a1,b2}, {a2,b1}, {a2,b2}.
std::array<Chord, 4> quadrilateral_sides(Diagonal d1, Diagonal d2, Polygon p) {
  return {normalize(d1.a, d2.a, p), normalize(d1.a, d2.b, p),
          normalize(d1.b, d2.a, p), normalize(d1.b, d2.b, p)};
}

}  // namespace

PtolemyDiagram::PtolemyDiagram(Polygon p, std::vector<Diagonal> diagonals)
    : polygon_(p), diagonals_(std::move(diagonals)) {
  for (Diagonal d : diagonals_) {
    // re-normalizing must be the identity
    if (make_diagonal(d.a, d.b, polygon_) != d)
      throw std::invalid_argument("diagonal " + to_string(d) +
                                  " is not normalized for an N=" +
                                  std::to_string(polygon_.size()) + " polygon");
  }
  std::ranges::sort(diagonals_);
  if (std::ranges::adjacent_find(diagonals_) != diagonals_.end())
    throw std::invalid_argument("duplicate diagonal in diagram");
}

bool PtolemyDiagram::contains(Diagonal d) const {
  return std::ranges::binary_search(diagonals_, d);
}

std::optional<ClosureViolation> validate(const PtolemyDiagram& d) {
  const auto& ds = d.diagonals();
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      if (!crosses(ds[i], ds[j])) continue;
      for (Chord side : quadrilateral_sides(ds[i], ds[j], d.polygon()))
        if (!is_edge(side) && !d.contains(*side))
          return ClosureViolation{ds[i], ds[j], *side};
    }
  return std::nullopt;
}

PtolemyDiagram ptolemy_closure(Polygon p, std::vector<Diagonal> seed) {
  PtolemyDiagram current(p, std::move(seed));
  for (;;) {
    auto violation = validate(current);
    if (!violation) return current;
    auto ds = current.diagonals();
    ds.push_back(violation->missing);
    current = PtolemyDiagram(p, std::move(ds));
  }
}

std::vector<Diagonal> interior_chords(const Cell& cell, Polygon p) {
  const auto& vs = cell.vertices;
  const int k = int(vs.size());
  std::vector<Diagonal> out;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (j - i == 1 || j - i == k - 1) continue;  // cell boundary
      out.push_back(make_diagonal(vs[i], vs[j], p));
    }
  std::ranges::sort(out);
  return out;
}

namespace {

// Rotate a cyclically ordered vertex list so the smallest label leads.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> vs) {
  auto min_it = std::ranges::min_element(vs);
  std::rotate(vs.begin(), min_it, vs.end());
  return vs;
}

void split_into_cells(std::vector<Vertex> verts,
                      const std::vector<Diagonal>& dissecting,
                      std::vector<std::vector<Vertex>>& cells) {
  const int k = int(verts.size());
  for (Diagonal d : dissecting) {
    auto ia = std::ranges::find(verts, d.a);
    auto ib = std::ranges::find(verts, d.b);
    if (ia == verts.end() || ib == verts.end()) continue;
    auto [lo, hi] = std::minmax(ia - verts.begin(), ib - verts.begin());
    if (hi - lo == 1 || hi - lo == k - 1) continue;  // boundary chord here
    std::vector<Vertex> inner(verts.begin() + lo, verts.begin() + hi + 1);
    std::vector<Vertex> outer(verts.begin() + hi, verts.end());
    outer.insert(outer.end(), verts.begin(), verts.begin() + lo + 1);
    split_into_cells(std::move(inner), dissecting, cells);
    split_into_cells(std::move(outer), dissecting, cells);
    return;
  }
  cells.push_back(canonical_cycle(std::move(verts)));
}

}  // namespace

Decomposition decompose(const PtolemyDiagram& d) {
  const auto& ds = d.diagonals();

  std::vector<Diagonal> dissecting;
  for (Diagonal a : ds) {
    bool crossed = std::ranges::any_of(
        ds, [&](Diagonal b) { return b != a && crosses(a, b); });
    if (!crossed) dissecting.push_back(a);
  }

  std::vector<Vertex> hull(d.polygon().size());
  for (int v = 1; v <= d.polygon().size(); ++v) hull[v - 1] = v;
  std::vector<std::vector<Vertex>> raw_cells;
  split_into_cells(std::move(hull), dissecting, raw_cells);
  std::ranges::sort(raw_cells);

  Decomposition dec{d.polygon(), std::move(dissecting), {}};
  for (auto& vs : raw_cells) {
    Cell cell{std::move(vs), CellKind::Empty};
    auto interior = interior_chords(cell, d.polygon());
    auto present = std::size_t(std::ranges::count_if(
        interior, [&](Diagonal c) { return d.contains(c); }));
    if (present == interior.size() && !interior.empty())
      cell.kind = CellKind::Clique;
    else if (present != 0)
      throw StructureError("cell has a proper nonempty subset of its interior "
                           "diagonals; diagram is not Ptolemy-closed");
    dec.cells.push_back(std::move(cell));
  }
  return dec;
}

PtolemyDiagram suspend(const PtolemyDiagram& d) {
  std::vector<Diagonal> out;
  out.reserve(d.diagonals().size());
  for (Diagonal x : d.diagonals()) out.push_back(suspend(x, d.polygon()));
  return PtolemyDiagram(d.polygon(), std::move(out));
}

void enumerate_ptolemy(Polygon p,
                       const std::function<void(const PtolemyDiagram&)>& yield) {
  if (p.size() > 9)
    throw GuardError("enumeration is limited to N <= 9, got N = " +
                     std::to_string(p.size()));
  const auto diags = all_diagonals(p);
  const int m = int(diags.size());

  // For every crossing pair, the mask of sides its closure demands.
  struct PairRule {
    std::uint32_t pair;
    std::uint32_t required;
  };
  auto index_of = [&](Diagonal d) {
    return std::uint32_t(std::ranges::lower_bound(diags, d) - diags.begin());
  };
  std::vector<PairRule> rules;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (!crosses(diags[i], diags[j])) continue;
      std::uint32_t req = 0;
      for (Chord side : quadrilateral_sides(diags[i], diags[j], p))
        if (!is_edge(side)) req |= std::uint32_t(1) << index_of(*side);
      rules.push_back({std::uint32_t(1) << i | std::uint32_t(1) << j, req});
    }

  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    bool closed = true;
    for (const PairRule& r : rules)
      if ((mask & r.pair) == r.pair && (r.required & ~mask) != 0) {
        closed = false;
        break;
      }
    if (!closed) continue;
    std::vector<Diagonal> set;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) set.push_back(diags[i]);
    yield(PtolemyDiagram(p, std::move(set)));
  }
}

std::vector<PtolemyDiagram> all_ptolemy_diagrams(Polygon p) {
  std::vector<PtolemyDiagram> out;
  enumerate_ptolemy(p, [&](const PtolemyDiagram& d) { out.push_back(d); });
  return out;
}

}  // namespace ccfrieze
