#include "ccfrieze/fixtures.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "ccfrieze/cc_map.hpp"
#include "ccfrieze/frieze.hpp"
#include "ccfrieze/oracle.hpp"

namespace ccfrieze::fixtures {

namespace {

PtolemyDiagram diagram(int n, std::initializer_list<std::pair<int, int>> pairs) {
  Polygon p(n);
  std::vector<Diagonal> ds;
  for (auto [a, b] : pairs) ds.push_back(make_diagonal(a, b, p));
  return PtolemyDiagram(p, std::move(ds));
}

}  // namespace

PtolemyDiagram octagon_quad_clique() {
  return diagram(8, {{2, 4}, {2, 5}, {1, 4}, {1, 5}, {5, 8}});
}

PtolemyDiagram octagon_pentagon_clique() {
  return diagram(8, {{2, 6}, {2, 7}, {2, 8}, {4, 6}, {6, 8}, {1, 6}, {1, 7}});
}

PtolemyDiagram full_clique(int vertices) {
  Polygon p(vertices);
  return PtolemyDiagram(p, all_diagonals(p));
}

PtolemyDiagram pentagon_fan() { return diagram(5, {{1, 3}, {1, 4}}); }

PtolemyDiagram empty_diagram(int vertices) {
  return PtolemyDiagram(Polygon(vertices), {});
}

namespace {

std::ostream& operator<<(std::ostream& os, const std::set<Integer>& xs) {
  os << '{';
  bool first = true;
  for (const auto& x : xs) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  return os << '}';
}

// Collects failure messages for one example; empty = pass.
class Check {
 public:
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& label) {
    if (!(got == want)) {
      std::ostringstream msg;
      msg << label << ": got " << got << ", want " << want;
      failures_.push_back(msg.str());
    }
  }
  void that(bool ok, const std::string& label) {
    if (!ok) failures_.push_back(label);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

bool rho_matches_oracle(const PtolemyDiagram& d, Check& check) {
  RhoComputer computer(d);
  for (Diagonal m : all_diagonals(d.polygon()))
    if (computer.rho(m) != count_subfunctors(m, d)) {
      check.that(false, "recursion and subfunctor count disagree at {" +
                            std::to_string(m.a) + "," + std::to_string(m.b) + "}");
      return false;
    }
  return true;
}

// True iff `fragment` occurs as a consecutive run in the cyclic sequence.
bool cyclic_contains(const std::vector<Integer>& row,
                     const std::vector<int>& fragment) {
  const int n = int(row.size());
  if (int(fragment.size()) > n) return false;
  for (int start = 0; start < n; ++start) {
    bool hit = true;
    for (int k = 0; k < int(fragment.size()); ++k)
      if (row[(start + k) % n] != fragment[k]) {
        hit = false;
        break;
      }
    if (hit) return true;
  }
  return false;
}

std::set<Integer> distinct_interior_entries(const FriezeBand& band) {
  std::set<Integer> out;
  const int n = band.polygon().size();
  for (int w = 2; w <= n - 2; ++w)
    for (int i = 1; i <= n; ++i) out.insert(band.entry(i, w));
  return out;
}

std::set<Integer> distinct_determinants(const FriezeBand& band) {
  std::set<Integer> out;
  for (const auto& report : diamond_determinants(band)) out.insert(report.det);
  return out;
}

std::set<Integer> to_set(std::initializer_list<int> xs) {
  std::set<Integer> out;
  for (int x : xs) out.insert(x);
  return out;
}

void check_quad_clique(Check& check) {
  auto d = octagon_quad_clique();
  check.that(!validate(d).has_value(), "diagram should be closed");

  auto dec = decompose(d);
  std::vector<Diagonal> dissecting{{1, 5}, {2, 4}, {5, 8}};
  check.that(dec.dissecting == dissecting, "dissecting diagonals differ");
  std::vector<Cell> cells{{{1, 2, 4, 5}, CellKind::Clique},
                          {{1, 5, 8}, CellKind::Empty},
                          {{2, 3, 4}, CellKind::Empty},
                          {{5, 6, 7, 8}, CellKind::Empty}};
  check.that(dec.cells == cells, "cells differ");

  RhoComputer computer(d);
  check.equal(computer.rho({2, 5}), 2, "rho({2,5})");
  check.equal(computer.rho({1, 4}), 2, "rho({1,4})");
  rho_matches_oracle(d, check);
}

void check_full_clique_octagon(Check& check) {
  auto d = full_clique(8);
  RhoComputer computer(d);
  check.equal(computer.rho({2, 7}), 15, "rho({2,7})");
  check.equal(count_subfunctors({2, 7}, d), 15, "subfunctor count of {2,7}");
  check.equal(staircase_count({4, 2}), 15, "staircase 4x2");
  for (Diagonal m : all_diagonals(d.polygon()))
    check.equal(computer.rho(m), binomial(6, m.b - m.a - 1),
                "clique binomial at {" + std::to_string(m.a) + "," +
                    std::to_string(m.b) + "}");
}

void check_pentagon_clique_octagon(Check& check) {
  auto d = octagon_pentagon_clique();
  RhoComputer computer(d);
  check.equal(computer.rho({4, 6}), 1, "rho({4,6})");
  check.equal(computer.rho({2, 4}), 1, "rho({2,4})");
  check.equal(computer.rho({2, 8}), 3, "rho({2,8})");
  check.equal(computer.rho({6, 8}), 3, "rho({6,8})");
  check.equal(computer.rho({4, 8}), 6, "rho({4,8})");
  check.equal(computer.rho({5, 8}), 9, "rho({5,8})");

  auto band = build_band(rho_table(d));
  const std::vector<std::pair<int, std::vector<int>>> printed_rows{
      {2, {4, 1, 2, 1, 5}},
      {3, {6, 4, 2, 1, 4, 9}},
      {4, {6, 7, 1, 4, 6}},
      {5, {4, 9, 3, 3, 6, 4}},
      {6, {5, 3, 3, 3, 4}},
  };
  for (const auto& [w, fragment] : printed_rows)
    check.that(cyclic_contains(band.rows()[w - 1], fragment),
               "row w=" + std::to_string(w) + " misses its printed fragment");

  auto dets = distinct_determinants(band);
  check.that(std::ranges::includes(to_set({0, 1, 6}), dets),
             "determinants outside {0,1,6}");
  rho_matches_oracle(d, check);
}

void check_pentagon_fan(Check& check) {
  auto d = pentagon_fan();
  auto table = rho_table(d);
  check.equal(table.values.at({1, 3}), 1, "rho({1,3})");
  check.equal(table.values.at({1, 4}), 1, "rho({1,4})");
  check.equal(table.values.at({2, 4}), 2, "rho({2,4})");
  check.equal(table.values.at({2, 5}), 3, "rho({2,5})");
  check.equal(table.values.at({3, 5}), 2, "rho({3,5})");

  auto band = build_band(table);
  check.equal(distinct_determinants(band), to_set({1}), "fan determinants");
  check.that(cyclic_contains(band.rows()[1], {3, 1, 2, 2, 1}),
             "quiddity row misses 3 1 2 2 1");
}

void check_small_cliques(Check& check) {
  struct Expected {
    int n;
    std::set<Integer> entries;
    std::set<Integer> dets;
  };
  const std::vector<Expected> wanted{
      {4, to_set({2}), to_set({3})},
      {5, to_set({3}), to_set({6})},
      {6, to_set({4, 6}), to_set({10, 20})},
      {7, to_set({5, 10}), to_set({15, 50})},
  };
  for (const auto& [n, entries, dets] : wanted) {
    auto band = build_band(rho_table(full_clique(n)));
    check.equal(distinct_interior_entries(band), entries,
                std::to_string(n) + "-gon entries");
    check.equal(distinct_determinants(band), dets,
                std::to_string(n) + "-gon determinants");
  }
}

}  // namespace

bool run_examples(std::ostream& out) {
  struct Example {
    const char* name;
    void (*run)(Check&);
  };
  const Example examples[] = {
      {"octagon-quad-clique", check_quad_clique},
      {"octagon-full-clique", check_full_clique_octagon},
      {"octagon-pentagon-clique", check_pentagon_clique_octagon},
      {"pentagon-fan", check_pentagon_fan},
      {"single-clique-gons", check_small_cliques},
  };
  bool all_ok = true;
  for (const auto& example : examples) {
    Check check;
    example.run(check);
    if (check.failures().empty()) {
      out << "PASS " << example.name << "\n";
    } else {
      all_ok = false;
      out << "FAIL " << example.name << "\n";
      for (const auto& f : check.failures()) out << "  " << f << "\n";
    }
  }
  return all_ok;
}

}  // namespace ccfrieze::fixtures
