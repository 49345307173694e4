// Command-line front end for typed ordered fuzzy numbers.
//
// Exit codes: 0 ok, 2 parse/usage, 3 mixed type, 4 math, 5 I/O.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "tofn/demo.hpp"
#include "tofn/tofn.hpp"

namespace {

enum ExitCode { ok = 0, parse_error = 2, type_error = 3, math_error = 4, io_error = 5 };

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content) || !out.flush()) throw IoFailure("cannot write '" + path + "'");
}

tofn::json classify_json(const tofn::TypedOfn& x) {
  const tofn::ProprietyReport r = tofn::classify(x);
  return {{"proper", r.proper},
          {"orientation", tofn::to_string(r.orientation)},
          {"same_sign", r.same_sign},
          {"crossing", r.crossing},
          {"pathology", tofn::to_string(r.pathology)}};
}

int run_graph(const std::string& path, std::size_t source) {
  const tofn::FuzzyDigraph g = tofn::graph_from_document(tofn::json::parse(read_file(path)));
  const tofn::ShortestPaths sp = tofn::shortest_paths(g, source);
  tofn::json out = tofn::json::array();
  for (std::size_t v = 0; v < g.nodes(); ++v) {
    tofn::json row{{"node", v}};
    if (sp.distance[v]) {
      row["distance"] = tofn::to_document(*sp.distance[v]);
      row["rank"] = tofn::rank(*sp.distance[v]);
    } else {
      row["distance"] = nullptr;
    }
    row["predecessor"] = sp.predecessor[v] ? tofn::json(*sp.predecessor[v]) : tofn::json(nullptr);
    out.push_back(row);
  }
  std::cout << out.dump(2) << '\n';
  return ok;
}

int run_demo() {
  bool all = true;
  for (const auto& row : tofn::run_demo()) {
    std::printf("%-4s %d  %-48s %s\n", row.passed ? "PASS" : "FAIL", row.id, row.title.c_str(), row.detail.c_str());
    all = all && row.passed;
  }
  return all ? ok : math_error;
}

} // namespace

int main(int argc, char** argv) {
  std::locale::global(std::locale::classic());
  CLI::App app{"Typed ordered fuzzy number toolkit"};
  app.require_subcommand(1);

  std::string expr, in_path, out_path, edges_path;
  int points = 0;
  std::size_t source = 0;

  auto* eval = app.add_subcommand("eval", "Evaluate a ring expression over OFN literals");
  eval->add_option("--expr", expr, "Expression, e.g. 'trap(1,-5,-1,-3) + trap(1,5,-1,3)'")->required();
  auto* cls = app.add_subcommand("classify", "Report propriety and pathology of an OFN document");
  cls->add_option("--in", in_path, "OFN JSON document")->required();
  auto* cor = app.add_subcommand("correct", "Repair an improper OFN within its type");
  cor->add_option("--in", in_path, "OFN JSON document")->required();
  auto* smp = app.add_subcommand("sample", "Sample both side functions to CSV");
  smp->add_option("--in", in_path, "OFN JSON document")->required();
  smp->add_option("--points", points, "Number of uniform alpha samples")->required()->check(CLI::Range(2, 1000000));
  smp->add_option("--out", out_path, "CSV output path")->required();
  auto* plt = app.add_subcommand("plot", "Draw both side functions as SVG");
  plt->add_option("--in", in_path, "OFN JSON document")->required();
  plt->add_option("--out", out_path, "SVG output path")->required();
  auto* gr = app.add_subcommand("graph", "Fuzzy shortest paths from a source node");
  gr->add_option("--edges", edges_path, "Graph JSON document")->required();
  gr->add_option("--source", source, "Source node index")->required();
  auto* dm = app.add_subcommand("demo", "Run the built-in worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_error;
  }

  try {
    if (*eval) {
      const tofn::TypedOfn r = tofn::evaluate_expression(expr);
      std::cout << tofn::to_document(r).dump() << '\n' << tofn::render_sides(r) << '\n';
    } else if (*cls) {
      std::cout << classify_json(tofn::parse_ofn_document(read_file(in_path))).dump() << '\n';
    } else if (*cor) {
      const tofn::Corrected c = tofn::correct(tofn::parse_ofn_document(read_file(in_path)));
      std::cout << tofn::json{{"result", tofn::to_document(c.ofn)}, {"applied", tofn::to_string(c.applied)}}.dump()
                << '\n';
    } else if (*smp) {
      const tofn::TypedOfn x = tofn::parse_ofn_document(read_file(in_path));
      std::ostringstream csv;
      tofn::write_csv(csv, x, points);
      write_file(out_path, csv.str());
    } else if (*plt) {
      write_file(out_path, tofn::render_svg(tofn::parse_ofn_document(read_file(in_path))));
    } else if (*gr) {
      return run_graph(edges_path, source);
    } else if (*dm) {
      return run_demo();
    }
    return ok;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io_error;
  } catch (const tofn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const tofn::DocumentError& e) {
    std::cerr << "document error: " << e.what() << '\n';
    return parse_error;
  } catch (const tofn::json::exception& e) {
    std::cerr << "document error: " << e.what() << '\n';
    return parse_error;
  } catch (const tofn::MixedTypeError& e) {
    std::cerr << "type error: " << e.what() << '\n';
    return type_error;
  } catch (const tofn::Error& e) {
    std::cerr << "math error: " << e.what() << '\n';
    return math_error;
  }
}
