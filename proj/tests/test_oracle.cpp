#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ccfrieze/cc_map.hpp"
#include "ccfrieze/fixtures.hpp"
#include "ccfrieze/oracle.hpp"

#include <set>

using namespace ccfrieze;

TEST_CASE("support collects exactly the crossing members") {
  auto banded = fixtures::octagon_pentagon_clique();
  CHECK(support({5, 8}, banded) ==
        std::vector<Diagonal>{{1, 6}, {1, 7}, {2, 6}, {2, 7}, {4, 6}});

  CHECK(support({2, 4}, fixtures::octagon_quad_clique()).empty());

  auto full = fixtures::full_clique(8);
  CHECK(support({2, 7}, full) ==
        std::vector<Diagonal>{
            {1, 3}, {1, 4}, {1, 5}, {1, 6}, {3, 8}, {4, 8}, {5, 8}, {6, 8}});
}

TEST_CASE("composite_nonzero on pinned cases") {
  Polygon p(8);
  // reflexive on the support
  CHECK(composite_nonzero({1, 5}, {1, 5}, {2, 7}, p));
  // the longer diagonal factors through the shorter, not vice versa
  CHECK(composite_nonzero({5, 8}, {1, 6}, {2, 7}, p));
  CHECK_FALSE(composite_nonzero({1, 6}, {5, 8}, {2, 7}, p));
  // precondition: both arguments must cross c
  CHECK_THROWS_AS(composite_nonzero({1, 5}, {3, 5}, {2, 7}, p),
                  std::invalid_argument);
}

TEST_CASE("composite_nonzero is reflexive and stays inside the support") {
  for (int n = 4; n <= 6; ++n) {
    Polygon p(n);
    for (const auto& d : all_ptolemy_diagrams(p))
      for (Diagonal c : all_diagonals(p)) {
        auto supp = support(c, d);
        for (Diagonal r : supp) {
          CHECK(composite_nonzero(r, r, c, p));
          for (Diagonal s : supp)
            if (composite_nonzero(s, r, c, p)) {
              CHECK(crosses(s, c));
              CHECK(crosses(r, c));
            }
        }
      }
  }
}

TEST_CASE("subfunctor counts on the worked diagrams") {
  CHECK(count_subfunctors({2, 7}, fixtures::full_clique(8)) == 15);
  CHECK(count_subfunctors({2, 4}, fixtures::octagon_quad_clique()) == 1);
  CHECK(count_subfunctors({5, 8}, fixtures::octagon_pentagon_clique()) == 9);
}

TEST_CASE("support guard") {
  // {1,7} in the full 13-gon clique has 5 x 6 = 30 crossing diagonals
  auto big = fixtures::full_clique(13);
  CHECK(support({1, 7}, big).size() == 30);
  CHECK_THROWS_AS(count_subfunctors({1, 7}, big), GuardError);
}

TEST_CASE("staircase counting") {
  CHECK(staircase_count({4, 2}) == 15);
  CHECK(staircase_count({0, 7}) == 1);
  CHECK(staircase_count({2, 1}) == 3);
  CHECK(staircase_count({0, 0}) == 1);
  CHECK_THROWS_AS(staircase_count({-1, 2}), std::invalid_argument);
}

TEST_CASE("narayana identity") {
  CHECK(narayana_identity_check(4, 2));
  CHECK(binomial(4, 2) * binomial(5, 2) / 3 == 20);
  CHECK(narayana_identity_check(5, 2));
  CHECK(binomial(5, 2) * binomial(6, 2) / 3 == 50);
  CHECK(narayana_identity_check(2, 1));
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k < n; ++k) CHECK(narayana_identity_check(n, k));
  CHECK_THROWS_AS(narayana_identity_check(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(narayana_identity_check(4, 4), std::invalid_argument);
}

TEST_CASE("oracle agrees with the recursion on every small diagram") {
  for (int n = 4; n <= 6; ++n) {
    Polygon p(n);
    for (const auto& d : all_ptolemy_diagrams(p)) {
      RhoComputer computer(d);
      for (Diagonal m : all_diagonals(p))
        CHECK(computer.rho(m) == count_subfunctors(m, d));
    }
  }
}

TEST_CASE("clique diagonals: count, staircase and binomial all agree") {
  for (int n = 4; n <= 8; ++n) {
    auto d = fixtures::full_clique(n);
    Cell cell{{}, CellKind::Clique};
    for (Vertex v = 1; v <= n; ++v) cell.vertices.push_back(v);
    for (Diagonal c : all_diagonals(d.polygon())) {
      int side = c.b - c.a - 1;
      Integer counted = count_subfunctors(c, d);
      CHECK(counted == staircase_count({side, n - 2 - side}));
      CHECK(counted == clique_rho(cell, c));
    }
  }
}

TEST_CASE("supersets leave counts alone where the support is unchanged") {
  for (int n : {5, 6}) {
    Polygon p(n);
    for (const auto& d : all_ptolemy_diagrams(p)) {
      for (Diagonal extra : all_diagonals(p)) {
        if (d.contains(extra)) continue;
        auto seed = d.diagonals();
        seed.push_back(extra);
        auto grown = ptolemy_closure(p, std::move(seed));
        for (Diagonal c : all_diagonals(p))
          if (support(c, d) == support(c, grown))
            CHECK(count_subfunctors(c, d) == count_subfunctors(c, grown));
      }
    }
  }
}
