#include "ccfrieze/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace ccfrieze {

std::vector<Diagonal> support(Diagonal c, const PtolemyDiagram& d) {
  std::vector<Diagonal> out;
  for (Diagonal e : d.diagonals())
    if (crosses(e, c)) out.push_back(e);
  return out;  // diagram storage is sorted already
}

bool composite_nonzero(Diagonal s, Diagonal r, Diagonal c, Polygon p) {
  if (!crosses(s, c) || !crosses(r, c))
    throw std::invalid_argument("composite_nonzero: both s and r must cross c");
  auto labelings = [](Diagonal d) {
    return std::array<std::array<Vertex, 2>, 2>{{{d.a, d.b}, {d.b, d.a}}};
  };
  for (auto [s0, s1] : labelings(s))
    for (auto [r0, r1] : labelings(r))
      for (auto [c0, c1] : labelings(c)) {
        std::array<Vertex, 8> chain{
            s0,         r0, p.prev(c0), p.prev(p.prev(s1)),
            s1,         r1, p.prev(c1), p.prev(p.prev(s0))};
        if (cyclic_weakly_ordered(chain, p)) return true;
      }
  return false;
}

Integer count_subfunctors(Diagonal c, const PtolemyDiagram& d) {
  const auto supp = support(c, d);
  const int k = int(supp.size());
  if (k > 25)
    throw GuardError("support of {" + std::to_string(c.a) + "," +
                     std::to_string(c.b) + "} has " + std::to_string(k) +
                     " members, above the enumeration guard of 25");

  // down[j] = members that must accompany supp[j] in a closed subset.
  std::vector<std::uint32_t> down(k, 0);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      if (composite_nonzero(supp[i], supp[j], c, d.polygon()))
        down[j] |= std::uint32_t(1) << i;

  std::uint64_t count = 0;
  for (std::uint32_t subset = 0;; ++subset) {
    bool closed = true;
    for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
      int j = std::countr_zero(rest);
      if (down[j] & ~subset) {
        closed = false;
        break;
      }
    }
    if (closed) ++count;
    if (subset == (std::uint32_t(1) << k) - 1) break;
  }
  return Integer(count);
}

Integer staircase_count(StaircaseRectangle rect) {
  if (rect.a < 0 || rect.b < 0)
    throw std::invalid_argument("staircase_count: side lengths must be >= 0");
  return binomial(rect.a + rect.b, rect.a);
}

bool narayana_identity_check(int n, int k) {
  if (!(0 < k && k < n))
    throw std::invalid_argument("narayana_identity_check requires 0 < k < n");
  Integer lhs = binomial(n, k) * binomial(n + 1, k);
  Integer rhs = binomial(n, k) * binomial(n, k) -
                binomial(n, k - 1) * binomial(n, k + 1);
  return lhs == (k + 1) * rhs;
}

}  // namespace ccfrieze
