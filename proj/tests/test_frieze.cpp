#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ccfrieze/fixtures.hpp"
#include "ccfrieze/frieze.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

using namespace ccfrieze;

namespace {

FriezeBand band_of(const PtolemyDiagram& d) {
  return build_band(rho_table(d));
}

std::set<Integer> det_values(const FriezeBand& band) {
  std::set<Integer> out;
  for (const auto& report : diamond_determinants(band)) out.insert(report.det);
  return out;
}

// Rows of integers parsed out of the text rendering, top to bottom.
std::vector<std::vector<Integer>> text_rows(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<Integer> row;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) row.emplace_back(tok);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool contains_run(const std::vector<Integer>& xs, const std::vector<int>& run) {
  if (run.size() > xs.size()) return false;
  for (std::size_t start = 0; start + run.size() <= xs.size(); ++start) {
    bool hit = true;
    for (std::size_t k = 0; k < run.size(); ++k)
      if (xs[start + k] != run[k]) {
        hit = false;
        break;
      }
    if (hit) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("band layout and the glide symmetry") {
  auto band = band_of(fixtures::octagon_pentagon_clique());
  const int n = 8;
  CHECK(band.rows().size() == 7);

  // frozen rows, w = 2..6
  CHECK(band.rows()[1] == std::vector<Integer>{4, 1, 2, 1, 5, 3, 3, 3});
  CHECK(band.rows()[2] == std::vector<Integer>{4, 2, 1, 4, 9, 3, 3, 6});
  CHECK(band.rows()[3] == std::vector<Integer>{7, 1, 4, 6, 7, 1, 4, 6});
  CHECK(band.rows()[4] == std::vector<Integer>{3, 3, 6, 4, 2, 1, 4, 9});
  CHECK(band.rows()[5] == std::vector<Integer>{3, 3, 4, 1, 2, 1, 5, 3});

  for (int w = 1; w <= n - 1; ++w)
    for (int i = 1; i <= n; ++i) {
      CHECK(band.entry(i, w) == band.entry(i + w, n - w));  // glide
      CHECK(band.entry(i, w) == band.entry(i + n, w));      // periodicity
      if (w == 1 || w == n - 1) CHECK(band.entry(i, w) == 1);
    }
  CHECK_THROWS_AS(band.entry(1, 0), std::out_of_range);
  CHECK_THROWS_AS(band.entry(1, n), std::out_of_range);
}

TEST_CASE("bands of the extreme diagrams") {
  auto flat = band_of(fixtures::empty_diagram(7));
  for (const auto& row : flat.rows())
    for (const auto& x : row) CHECK(x == 1);
  for (const auto& report : diamond_determinants(flat)) CHECK(report.det == 0);

  auto pentagon = band_of(fixtures::full_clique(5));
  for (int w = 2; w <= 3; ++w)
    for (int i = 1; i <= 5; ++i) CHECK(pentagon.entry(i, w) == 3);
}

TEST_CASE("diamond determinants on the worked diagrams") {
  CHECK(det_values(band_of(fixtures::octagon_pentagon_clique())) ==
        std::set<Integer>{0, 1, 6});
  CHECK(det_values(band_of(fixtures::pentagon_fan())) == std::set<Integer>{1});
  CHECK(det_values(band_of(fixtures::full_clique(7))) ==
        std::set<Integer>{15, 50});

  // each report restates ad - bc at its own position
  auto band = band_of(fixtures::octagon_quad_clique());
  for (const auto& report : diamond_determinants(band)) {
    CHECK(report.det == band.entry(report.i, report.w) *
                                band.entry(report.i + 1, report.w) -
                            band.entry(report.i, report.w + 1) *
                                band.entry(report.i + 1, report.w - 1));
  }
}

TEST_CASE("text rendering interleaves the band rows") {
  auto band = band_of(fixtures::pentagon_fan());
  std::string text = render(band, RenderFormat::Text, 2);
  auto rows = text_rows(text);
  REQUIRE(rows.size() == 4);  // w = 4 (top) down to w = 1

  // boundary rows are all ones
  for (const auto& x : rows.front()) CHECK(x == 1);
  for (const auto& x : rows.back()) CHECK(x == 1);
  CHECK(rows[0].size() == 10);

  // the quiddity row of the fan frieze, across the period seam
  CHECK(contains_run(rows[2], {3, 1, 2, 2, 1}));

  auto flat = render(band_of(fixtures::empty_diagram(5)), RenderFormat::Text, 1);
  for (char ch : flat) CHECK((ch == '1' || ch == ' ' || ch == '\n'));
}

TEST_CASE("json rendering round-trips the entry map") {
  auto band = band_of(fixtures::octagon_pentagon_clique());
  auto doc = nlohmann::json::parse(render(band, RenderFormat::Json, 1));
  CHECK(doc["N"] == 8);
  REQUIRE(doc["rows"].size() == 7);
  for (int w = 1; w <= 7; ++w) {
    REQUIRE(doc["rows"][w - 1].size() == 8);
    for (int i = 1; i <= 8; ++i)
      CHECK(Integer(doc["rows"][w - 1][i - 1].get<std::string>()) ==
            band.entry(i, w));
  }
  auto reports = diamond_determinants(band);
  REQUIRE(doc["determinants"].size() == reports.size());
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& item = doc["determinants"][k];
    CHECK(item["i"].get<int>() == reports[k].i);
    CHECK(item["w"].get<int>() == reports[k].w);
    CHECK(Integer(item["det"].get<std::string>()) == reports[k].det);
  }
}

TEST_CASE("csv rendering carries both tables") {
  auto band = band_of(fixtures::pentagon_fan());
  std::string csv = render(band, RenderFormat::Csv, 1);
  CHECK(csv.starts_with("i,w,value\n1,1,1\n"));
  CHECK(csv.find("i,w,determinant\n") != std::string::npos);
  // deterministic output
  CHECK(csv == render(band, RenderFormat::Csv, 1));
  CHECK_THROWS_AS(render(band, RenderFormat::Csv, 0), std::invalid_argument);
}

TEST_CASE("build_band rejects incomplete tables") {
  auto table = rho_table(fixtures::pentagon_fan());
  table.values.erase(Diagonal{2, 5});
  CHECK_THROWS_AS(build_band(table), std::invalid_argument);
}
