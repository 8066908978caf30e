#include "ccfrieze/frieze.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ccfrieze {

FriezeBand::FriezeBand(Polygon p, std::vector<std::vector<Integer>> rows)
    : polygon_(p), rows_(std::move(rows)) {
  if (int(rows_.size()) != p.size() - 1)
    throw std::invalid_argument("band needs N-1 rows");
  for (const auto& row : rows_)
    if (int(row.size()) != p.size())
      throw std::invalid_argument("band rows need N entries");
}

const Integer& FriezeBand::entry(int i, int w) const {
  if (w < 1 || w > polygon_.size() - 1)
    throw std::out_of_range("band width out of range: " + std::to_string(w));
  int n = polygon_.size();
  int col = ((i - 1) % n + n) % n;
  return rows_[w - 1][col];
}

FriezeBand build_band(const RhoTable& table) {
  const Polygon p = table.polygon;
  const int n = p.size();
  if (int(table.values.size()) != p.diagonal_count())
    throw std::invalid_argument("rho table is incomplete");

  std::vector<std::vector<Integer>> rows(n - 1, std::vector<Integer>(n, 1));
  for (int w = 2; w <= n - 2; ++w)
    for (int i = 1; i <= n; ++i) {
      Vertex j = (i + w - 1) % n + 1;
      rows[w - 1][i - 1] = table.values.at(*normalize(i, j, p));
    }
  return FriezeBand(p, std::move(rows));
}

namespace {

Integer diamond_det(const FriezeBand& band, int i, int w) {
  return band.entry(i, w) * band.entry(i + 1, w) -
         band.entry(i, w + 1) * band.entry(i + 1, w - 1);
}

}  // namespace

std::vector<DiamondReport> diamond_determinants(const FriezeBand& band) {
  const int n = band.polygon().size();
  std::vector<DiamondReport> out;
  out.reserve(std::size_t(n) * std::size_t(std::max(0, n - 3)));
  for (int w = 2; w <= n - 2; ++w)
    for (int i = 1; i <= n; ++i)
      out.push_back(DiamondReport{i, w, diamond_det(band, i, w)});
  return out;
}

namespace {

std::string render_text(const FriezeBand& band, int periods) {
  const int n = band.polygon().size();
  const int cols = periods * n;

  std::size_t cell = 1;
  for (int w = 1; w <= n - 1; ++w)
    for (int i = 1; i <= cols; ++i)
      cell = std::max(cell, band.entry(i, w).str().size());

  std::string out;
  for (int w = n - 1; w >= 1; --w) {
    std::string line;
    for (int i = 1; i <= cols; ++i) {
      // entry (i, w) sits at half-step 2(i-1) + (w-1); one half-step is
      // `cell` characters wide, so same-row neighbors are 2*cell apart.
      std::size_t pos = std::size_t(2 * (i - 1) + (w - 1)) * cell;
      if (line.size() < pos) line.resize(pos, ' ');
      line += band.entry(i, w).str();
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_json(const FriezeBand& band, int periods) {
  const int n = band.polygon().size();
  const int cols = periods * n;
  nlohmann::ordered_json doc;
  doc["N"] = n;
  auto rows = nlohmann::ordered_json::array();
  for (int w = 1; w <= n - 1; ++w) {
    auto row = nlohmann::ordered_json::array();
    for (int i = 1; i <= cols; ++i) row.push_back(band.entry(i, w).str());
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  auto dets = nlohmann::ordered_json::array();
  for (int w = 2; w <= n - 2; ++w)
    for (int i = 1; i <= cols; ++i)
      dets.push_back({{"i", i}, {"w", w}, {"det", diamond_det(band, i, w).str()}});
  doc["determinants"] = std::move(dets);
  return doc.dump() + "\n";
}

std::string render_csv(const FriezeBand& band, int periods) {
  const int n = band.polygon().size();
  const int cols = periods * n;
  std::ostringstream out;
  out << "i,w,value\n";
  for (int w = 1; w <= n - 1; ++w)
    for (int i = 1; i <= cols; ++i)
      out << i << ',' << w << ',' << band.entry(i, w) << '\n';
  out << "i,w,determinant\n";
  for (int w = 2; w <= n - 2; ++w)
    for (int i = 1; i <= cols; ++i)
      out << i << ',' << w << ',' << diamond_det(band, i, w) << '\n';
  return out.str();
}

}  // namespace

std::string render(const FriezeBand& band, RenderFormat format, int periods) {
  if (periods < 1) throw std::invalid_argument("periods must be >= 1");
  switch (format) {
    case RenderFormat::Text: return render_text(band, periods);
    case RenderFormat::Json: return render_json(band, periods);
    case RenderFormat::Csv: return render_csv(band, periods);
  }
  throw std::logic_error("unknown render format");
}

}  // namespace ccfrieze
