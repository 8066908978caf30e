// Command-line front end: validation, rho tables, oracle cross-checks and
// frieze rendering for Ptolemy diagram files.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccfrieze/cc_map.hpp"
#include "ccfrieze/diagram_io.hpp"
#include "ccfrieze/fixtures.hpp"
#include "ccfrieze/frieze.hpp"
#include "ccfrieze/oracle.hpp"

namespace {

using namespace ccfrieze;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;     // validation failure or oracle mismatch
constexpr int kExitBadInput = 2;   // parse / argument problems
constexpr int kExitGuard = 3;      // blowup guard tripped

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

PtolemyDiagram load_diagram(const std::string& path) {
  return read_diagram_json(slurp(path));
}

Diagonal parse_diagonal_arg(const std::string& arg, Polygon p) {
  auto comma = arg.find(',');
  if (comma == std::string::npos)
    throw ParseError("--diagonal expects the form a,b, got: " + arg);
  int a = 0, b = 0;
  try {
    std::size_t used = 0;
    a = std::stoi(arg.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(arg);
    b = std::stoi(arg.substr(comma + 1), &used);
    if (used != arg.size() - comma - 1) throw std::invalid_argument(arg);
  } catch (const std::exception&) {
    throw ParseError("--diagonal expects two integers a,b, got: " + arg);
  }
  try {
    return make_diagonal(a, b, p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

RenderFormat parse_format(const std::string& name) {
  if (name == "text") return RenderFormat::Text;
  if (name == "json") return RenderFormat::Json;
  if (name == "csv") return RenderFormat::Csv;
  throw ParseError("unknown format: " + name);
}

std::string show(Diagonal d) {
  return "{" + std::to_string(d.a) + "," + std::to_string(d.b) + "}";
}

int cmd_validate(const std::string& input) {
  auto d = load_diagram(input);
  if (auto violation = validate(d)) {
    std::cout << "closure violation: " << show(violation->first) << " and "
              << show(violation->second) << " cross but "
              << show(violation->missing) << " is missing\n";
    return kExitFailed;
  }
  std::cout << "Ok\n";
  return kExitOk;
}

int cmd_rho(const std::string& input, const std::string& diagonal_arg) {
  auto d = load_diagram(input);
  Diagonal m = parse_diagonal_arg(diagonal_arg, d.polygon());
  std::cout << rho(m, d) << "\n";
  return kExitOk;
}

int cmd_table(const std::string& input, const std::string& format) {
  auto d = load_diagram(input);
  auto table = rho_table(d);
  switch (parse_format(format)) {
    case RenderFormat::Text:
      for (const auto& [m, value] : table.values)
        std::cout << show(m) << " " << value << "\n";
      break;
    case RenderFormat::Csv:
      std::cout << "a,b,rho\n";
      for (const auto& [m, value] : table.values)
        std::cout << m.a << ',' << m.b << ',' << value << "\n";
      break;
    case RenderFormat::Json: {
      nlohmann::ordered_json doc;
      doc["N"] = d.polygon().size();
      auto values = nlohmann::ordered_json::array();
      for (const auto& [m, value] : table.values)
        values.push_back({{"diagonal", {m.a, m.b}}, {"rho", value.str()}});
      doc["values"] = std::move(values);
      std::cout << doc.dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_frieze(const std::string& input, const std::string& format,
               int periods) {
  auto d = load_diagram(input);
  auto band = build_band(rho_table(d));
  std::cout << render(band, parse_format(format), periods);
  return kExitOk;
}

int cmd_oracle(const std::string& input) {
  auto d = load_diagram(input);
  RhoComputer computer(d);
  bool mismatch = false;
  for (Diagonal m : all_diagonals(d.polygon())) {
    Integer recursive = computer.rho(m);
    Integer counted = count_subfunctors(m, d);
    std::cout << show(m) << " rho=" << recursive << " oracle=" << counted;
    if (recursive != counted) {
      std::cout << " MISMATCH";
      mismatch = true;
    }
    std::cout << "\n";
  }
  return mismatch ? kExitFailed : kExitOk;
}

int cmd_examples() {
  return fixtures::run_examples(std::cout) ? kExitOk : kExitFailed;
}

int cmd_enumerate(int n) {
  enumerate_ptolemy(Polygon(n), [](const PtolemyDiagram& d) {
    std::cout << write_diagram_json(d) << "\n";
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Caldero-Chapoton maps and frieze patterns of "
               "Ptolemy diagrams"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string diagonal_arg;
  std::string format = "text";
  int periods = 1;
  int enum_n = 0;

  auto* validate_cmd = app.add_subcommand(
      "validate", "Check the Ptolemy closure rule on a diagram file");
  validate_cmd->add_option("--input", input, "diagram file, or - for stdin");

  auto* rho_cmd =
      app.add_subcommand("rho", "Print rho of one diagonal of the diagram");
  rho_cmd->add_option("--input", input, "diagram file, or - for stdin");
  rho_cmd->add_option("--diagonal", diagonal_arg, "the diagonal, as a,b")
      ->required();

  auto* table_cmd =
      app.add_subcommand("table", "Print rho for every diagonal of the N-gon");
  table_cmd->add_option("--input", input, "diagram file, or - for stdin");
  table_cmd->add_option("--format", format, "text, json or csv");

  auto* frieze_cmd =
      app.add_subcommand("frieze", "Render the frieze band of the diagram");
  frieze_cmd->add_option("--input", input, "diagram file, or - for stdin");
  frieze_cmd->add_option("--format", format, "text, json or csv");
  frieze_cmd->add_option("--periods", periods, "horizontal repeats, >= 1")
      ->check(CLI::PositiveNumber);

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Cross-check the recursion against subfunctor counting");
  oracle_cmd->add_option("--input", input, "diagram file, or - for stdin");

  app.add_subcommand("examples", "Run the bundled worked examples");

  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "Stream every Ptolemy diagram of the N-gon (N <= 9)");
  enumerate_cmd->add_option("--n", enum_n, "polygon size")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate(input);
    if (rho_cmd->parsed()) return cmd_rho(input, diagonal_arg);
    if (table_cmd->parsed()) return cmd_table(input, format);
    if (frieze_cmd->parsed()) return cmd_frieze(input, format, periods);
    if (oracle_cmd->parsed()) return cmd_oracle(input);
    if (app.get_subcommand("examples")->parsed()) return cmd_examples();
    if (enumerate_cmd->parsed()) {
      if (enum_n < 4) throw ParseError("--n must be at least 4");
      return cmd_enumerate(enum_n);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    // e.g. rho/table/frieze/oracle on a diagram that fails validation
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitOk;
}
