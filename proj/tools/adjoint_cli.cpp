// Command-line front end: renders the four example tables (checked against
// the embedded reference), evaluates the level and family-degree bounds,
// exposes chain construction/realization, the search oracles, and the
// lattice-polygon reports.  Exit codes: 0 success, 1 domain error,
// 2 infeasible, 3 internal invariant failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adjoint/bounds.hpp"
#include "adjoint/builder.hpp"
#include "adjoint/chain.hpp"
#include "adjoint/errors.hpp"
#include "adjoint/ints.hpp"
#include "adjoint/oracle.hpp"
#include "adjoint/polygon.hpp"
#include "adjoint/tables.hpp"

namespace {

using namespace adjoint;

struct GlobalOptions {
  std::string format = "markdown";
  bool strict_parity = false;
  std::string caps;
  std::string out;
};

void write_output(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) {
    throw DomainError("cannot open output file: " + g.out);
  }
  file << text;
}

Int parse_int(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw DomainError("expected an integer for " + what + ", got '" + token +
                      "'");
  }
}

SearchCaps parse_caps(const std::string& spec) {
  if (spec.empty()) return SearchCaps{};
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  if (parts.size() != 3) {
    throw DomainError("--caps wants three integers l,n,gamma, got '" + spec +
                      "'");
  }
  SearchCaps caps;
  caps.max_l = parse_int(parts[0], "--caps level");
  caps.max_n_per_step = parse_int(parts[1], "--caps contractions");
  caps.max_abs_gamma0 = parse_int(parts[2], "--caps gamma");
  return caps;
}

std::vector<LatticePoint> parse_vertices(const std::vector<std::string>& raw) {
  std::vector<LatticePoint> vertices;
  for (const std::string& token : raw) {
    const auto comma = token.find(',');
    if (comma == std::string::npos || token.find(',', comma + 1) !=
                                          std::string::npos) {
      throw DomainError("expected a vertex as x,y, got '" + token + "'");
    }
    vertices.push_back({parse_int(token.substr(0, comma), "vertex x"),
                        parse_int(token.substr(comma + 1), "vertex y")});
  }
  return vertices;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

//// table ////

int run_table(const GlobalOptions& g, Int id) {
  const ExampleTable table = build_example_table(id);
  if (g.format == "json") {
    write_output(g, json_text(example_table_json(table)));
  } else if (g.format == "csv") {
    write_output(g, example_table_csv(table));
  } else {
    write_output(g, example_table_markdown(table));
  }
  const TableComparison cmp = compare_to_golden(table);
  if (!cmp.ok()) {
    std::cerr << "table " << id << " disagrees with the reference copy:\n";
    for (const std::string& diff : cmp.differences) {
      std::cerr << "  " << diff << "\n";
    }
    return 3;
  }
  return 0;
}

//// bound ////

int run_bound(const GlobalOptions& g, Int alpha0, Int beta0, Int p) {
  const Int l_tilde = theorem_bound(alpha0, beta0, p);
  const Int exact = max_level(checked_sub(alpha0, beta0), beta0, p);
  const Int v_theorem = family_degree_bound(l_tilde, p);
  const Int v_exact = family_degree_bound(exact, p);
  if (g.format == "json") {
    write_output(g, json_text({{"alpha0", alpha0},
                               {"beta0", beta0},
                               {"p", p},
                               {"theorem_bound", l_tilde},
                               {"theorem_v_bound", v_theorem},
                               {"max_level", exact},
                               {"max_level_v_bound", v_exact}}));
  } else if (g.format == "csv") {
    std::ostringstream os;
    os << "quantity,l,v_bound\n"
       << "theorem_bound," << l_tilde << "," << v_theorem << "\n"
       << "max_level," << exact << "," << v_exact << "\n";
    write_output(g, os.str());
  } else {
    std::ostringstream os;
    os << "theorem_bound = " << l_tilde << " (v <= " << v_theorem << ")\n"
       << "max_level = " << exact << " (v <= " << v_exact << ")\n";
    write_output(g, os.str());
  }
  return 0;
}

//// polygon ////

int run_polygon_level(const GlobalOptions& g,
                      const std::vector<std::string>& raw) {
  const LatticePolygon p = make_polygon(parse_vertices(raw));
  const Int value = level(p);
  if (g.format == "json") {
    write_output(g, json_text({{"vertices", polygon_to_json(p)},
                               {"level", value}}));
  } else {
    write_output(g, std::to_string(value) + "\n");
  }
  return 0;
}

int run_polygon_check(const GlobalOptions& g,
                      const std::vector<std::string>& raw) {
  const LatticePolygon p = make_polygon(parse_vertices(raw));
  const InequalityReport report = check_inequalities(p);
  const bool pass = report.corollary_pass && report.eq2_pass;
  if (g.format == "json") {
    write_output(g, json_text(inequality_report_json(report)));
  } else if (g.format == "csv") {
    std::ostringstream os;
    os << "area2,b,v,level,lhs,rhs,pass\n"
       << report.invariants.area2 << "," << report.invariants.b << ","
       << report.invariants.v << "," << report.invariants.level << ","
       << report.lhs << "," << report.corollary_rhs << ","
       << (pass ? "pass" : "fail") << "\n";
    write_output(g, os.str());
  } else {
    std::ostringstream os;
    os << "area2 = " << report.invariants.area2
       << ", b = " << report.invariants.b << ", v = " << report.invariants.v
       << ", level = " << report.invariants.level << "\n"
       << "lhs = " << report.lhs << ", rhs = " << report.corollary_rhs << "\n";
    if (!report.level_in_range) {
      os << "level 0: the vertex-count inequality is reported, not asserted\n";
    }
    os << (pass ? "pass" : "fail") << "\n";
    write_output(g, os.str());
  }
  if (report.level_in_range && !pass) return 3;
  return 0;
}

int run_polygon_scan(const GlobalOptions& g, Int box, Int min_level) {
  const std::vector<LatticePolygon> classes =
      enumerate_polygons(box, min_level);
  std::ostringstream os;
  os << "area2,b,v,level,lhs,rhs,pass\n";
  Int failures = 0;
  for (const LatticePolygon& p : classes) {
    const InequalityReport report = check_inequalities(p);
    const bool pass = report.corollary_pass && report.eq2_pass;
    if (report.level_in_range && !pass) ++failures;
    os << report.invariants.area2 << "," << report.invariants.b << ","
       << report.invariants.v << "," << report.invariants.level << ","
       << report.lhs << "," << report.corollary_rhs << ","
       << (pass ? "pass" : "fail") << "\n";
  }
  write_output(g, os.str());
  if (failures != 0) {
    std::cerr << failures << " classes violate the inequality\n";
    return 3;
  }
  return 0;
}

//// construct / realize ////

int run_construct(const GlobalOptions& g, Int l, const EndPair& end, Int c) {
  const std::optional<ContractionVector> n = construct_adjoint_chain(l, end, c);
  if (g.format == "json") {
    write_output(g, json_text(construct_case_to_json({l, end, c, n})));
  } else if (g.format == "csv") {
    std::ostringstream os;
    if (n) {
      for (std::size_t i = 0; i < n->size(); ++i) {
        if (i) os << ",";
        os << (*n)[i];
      }
      os << "\n";
    } else {
      os << "None\n";
    }
    write_output(g, os.str());
  } else {
    std::ostringstream os;
    if (n) {
      os << "n = [";
      for (std::size_t i = 0; i < n->size(); ++i) {
        if (i) os << ", ";
        os << (*n)[i];
      }
      os << "]\n";
    } else {
      os << "None\n";
    }
    write_output(g, os.str());
  }
  return n ? 0 : 2;
}

int run_realize(const GlobalOptions& g, Int l, const EndPair& end,
                const std::vector<Int>& n) {
  const AdjointChain chain =
      realize_chain(l, end, n, g.strict_parity);
  if (g.format == "json") {
    write_output(g, json_text(chain_to_json(chain)));
  } else if (g.format == "csv") {
    write_output(g, chain_to_csv(chain));
  } else {
    write_output(g, chain_to_markdown(chain));
  }
  return 0;
}

//// oracle ////

int run_oracle_tightness(const GlobalOptions& g, Int h0, Int beta0, Int p) {
  const SearchCaps caps = parse_caps(g.caps);
  const TightnessResult result = verify_tightness(h0, beta0, p, caps);
  write_output(g, json_text(tightness_report_json(h0, beta0, p, result)));
  return 0;
}

int run_oracle_enumerate(const GlobalOptions& g, Int h0, Int beta0, Int p) {
  const SearchCaps caps = parse_caps(g.caps);
  const EnumerationResult result = enumerate_chains(h0, beta0, p, caps);
  write_output(g, json_text(enumeration_result_json(h0, beta0, p, result)));
  return 0;
}

int run_oracle_optimality(const GlobalOptions& g, Int l, const EndPair& end,
                          Int c) {
  const SearchCaps caps = parse_caps(g.caps);
  const OptimalityReport report = verify_algorithm_optimality(l, end, c, caps);
  write_output(g, json_text(optimality_report_json(report)));
  return 0;
}

// Lets the global options (--format, --caps, ...) appear after a
// subcommand name as well as before it.
void enable_fallthrough(CLI::App* cmd) {
  for (CLI::App* sub : cmd->get_subcommands(nullptr)) {
    sub->fallthrough();
    enable_fallthrough(sub);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adjoint-chain combinatorics of birational ruled surfaces"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"markdown", "json", "csv"}));
  app.add_flag("--strict-parity", g.strict_parity,
               "also require every h(i) to be even");
  app.add_option("--caps", g.caps, "oracle search caps as l,n,gamma");
  app.add_option("--out", g.out, "write output to a file instead of stdout");

  Int table_id = 0;
  CLI::App* table_cmd =
      app.add_subcommand("table", "render an example table (1..4)");
  table_cmd->add_option("id", table_id, "table id")->required();

  Int bound_alpha0 = 0, bound_beta0 = 0, bound_p = 0;
  CLI::App* bound_cmd =
      app.add_subcommand("bound", "level and family-degree bounds");
  bound_cmd->add_option("alpha0", bound_alpha0, "start degree")->required();
  bound_cmd->add_option("beta0", bound_beta0, "start beta")->required();
  bound_cmd->add_option("p", bound_p, "arithmetic genus")->required();

  CLI::App* polygon_cmd =
      app.add_subcommand("polygon", "lattice-polygon reports");
  polygon_cmd->require_subcommand(1);
  std::vector<std::string> polygon_vertices;
  CLI::App* polygon_level_cmd =
      polygon_cmd->add_subcommand("level", "adjoint level of a polygon");
  polygon_level_cmd->add_option("vertices", polygon_vertices, "vertices as x,y")
      ->expected(-3);
  std::vector<std::string> check_vertices;
  CLI::App* polygon_check_cmd = polygon_cmd->add_subcommand(
      "check", "evaluate the vertex-count inequality");
  polygon_check_cmd->add_option("vertices", check_vertices, "vertices as x,y")
      ->expected(-3);
  Int scan_box = 4, scan_min_level = 1;
  CLI::App* polygon_scan_cmd = polygon_cmd->add_subcommand(
      "scan", "scan every polygon class in a box, emit CSV");
  polygon_scan_cmd->add_option("--box", scan_box, "bounding box size");
  polygon_scan_cmd->add_option("--min-level", scan_min_level,
                               "smallest level to keep");

  Int con_l = 0, con_c = 0;
  EndPair con_end;
  CLI::App* construct_cmd = app.add_subcommand(
      "construct", "contraction vector for a start degree");
  construct_cmd->add_option("l", con_l, "level")->required();
  construct_cmd->add_option("alpha_l", con_end.alpha_l, "end degree")
      ->required();
  construct_cmd->add_option("beta_l", con_end.beta_l, "end beta")->required();
  construct_cmd->add_option("gamma_l", con_end.gamma_l, "end gamma")
      ->required();
  construct_cmd->add_option("c", con_c, "start degree")->required();

  Int real_l = 0;
  EndPair real_end;
  std::vector<Int> real_n;
  CLI::App* realize_cmd =
      app.add_subcommand("realize", "roll a chain from level, end, and n");
  realize_cmd->add_option("l", real_l, "level")->required();
  realize_cmd->add_option("alpha_l", real_end.alpha_l, "end degree")
      ->required();
  realize_cmd->add_option("beta_l", real_end.beta_l, "end beta")->required();
  realize_cmd->add_option("gamma_l", real_end.gamma_l, "end gamma")
      ->required();
  realize_cmd->add_option("n", real_n, "contraction counts n(0)..n(l-1)");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive-search cross-checks");
  oracle_cmd->require_subcommand(1);
  Int tight_h0 = 0, tight_beta0 = 0, tight_p = 0;
  CLI::App* tight_cmd = oracle_cmd->add_subcommand(
      "tightness", "enumerated maximum level vs the closed-form bound");
  tight_cmd->add_option("h0", tight_h0, "start h")->required();
  tight_cmd->add_option("beta0", tight_beta0, "start beta")->required();
  tight_cmd->add_option("p", tight_p, "arithmetic genus")->required();
  Int enum_h0 = 0, enum_beta0 = 0, enum_p = 0;
  CLI::App* enum_cmd =
      oracle_cmd->add_subcommand("enumerate", "every chain within caps");
  enum_cmd->add_option("h0", enum_h0, "start h")->required();
  enum_cmd->add_option("beta0", enum_beta0, "start beta")->required();
  enum_cmd->add_option("p", enum_p, "arithmetic genus")->required();
  Int opt_l = 0, opt_c = 0;
  EndPair opt_end;
  CLI::App* opt_cmd = oracle_cmd->add_subcommand(
      "optimality", "compare the constructed vector against all candidates");
  opt_cmd->add_option("l", opt_l, "level")->required();
  opt_cmd->add_option("alpha_l", opt_end.alpha_l, "end degree")->required();
  opt_cmd->add_option("beta_l", opt_end.beta_l, "end beta")->required();
  opt_cmd->add_option("gamma_l", opt_end.gamma_l, "end gamma")->required();
  opt_cmd->add_option("c", opt_c, "start degree")->required();

  enable_fallthrough(&app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (table_cmd->parsed()) return run_table(g, table_id);
    if (bound_cmd->parsed())
      return run_bound(g, bound_alpha0, bound_beta0, bound_p);
    if (polygon_cmd->parsed()) {
      if (polygon_level_cmd->parsed())
        return run_polygon_level(g, polygon_vertices);
      if (polygon_check_cmd->parsed())
        return run_polygon_check(g, check_vertices);
      return run_polygon_scan(g, scan_box, scan_min_level);
    }
    if (construct_cmd->parsed()) return run_construct(g, con_l, con_end, con_c);
    if (realize_cmd->parsed()) return run_realize(g, real_l, real_end, real_n);
    if (oracle_cmd->parsed()) {
      if (tight_cmd->parsed())
        return run_oracle_tightness(g, tight_h0, tight_beta0, tight_p);
      if (enum_cmd->parsed())
        return run_oracle_enumerate(g, enum_h0, enum_beta0, enum_p);
      return run_oracle_optimality(g, opt_l, opt_end, opt_c);
    }
    std::cerr << "no subcommand\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
