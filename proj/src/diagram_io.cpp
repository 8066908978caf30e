#include "ccfrieze/diagram_io.hpp"

#include <utility>

#include "json.hpp"

namespace ccfrieze {

namespace {

// nlohmann reports byte offsets; the diagnostic wants line/column.
std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

PtolemyDiagram read_diagram_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("invalid JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " + e.what(),
                     line, column);
  }

  if (!doc.is_object()) throw ParseError("top level must be a JSON object");
  if (!doc.contains("N") || !doc["N"].is_number_integer())
    throw ParseError("missing integer field \"N\"");
  if (!doc.contains("diagonals") || !doc["diagonals"].is_array())
    throw ParseError("missing array field \"diagonals\"");

  long long n = doc["N"].get<long long>();
  if (n < 4 || n > 1'000'000)
    throw ParseError("\"N\" must lie in 4..1000000, got " + std::to_string(n));
  Polygon polygon(static_cast<int>(n));

  std::vector<Diagonal> diagonals;
  for (const auto& pair : doc["diagonals"]) {
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer() || !pair[1].is_number_integer())
      throw ParseError("each diagonal must be a pair of integers, got " +
                       pair.dump());
    long long x = pair[0].get<long long>();
    long long y = pair[1].get<long long>();
    if (x < 1 || x > n || y < 1 || y > n)
      throw ParseError("vertex label out of range 1.." + std::to_string(n) +
                       " in " + pair.dump());
    try {
      diagonals.push_back(make_diagonal(int(x), int(y), polygon));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()));
    }
  }

  try {
    return PtolemyDiagram(polygon, std::move(diagonals));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()));
  }
}

std::string write_diagram_json(const PtolemyDiagram& d) {
  nlohmann::ordered_json doc;
  doc["N"] = d.polygon().size();
  auto pairs = nlohmann::ordered_json::array();
  for (Diagonal x : d.diagonals()) pairs.push_back({x.a, x.b});
  doc["diagonals"] = std::move(pairs);
  return doc.dump();
}

}  // namespace ccfrieze
