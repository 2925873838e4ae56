#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "aalpha/closedform.hpp"
#include "aalpha/construct.hpp"
#include "aalpha/exact.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/json_io.hpp"
#include "aalpha/spectra.hpp"
#include "aalpha/verify.hpp"

namespace aalpha::cli {

namespace {

// Graph argument: "-" is standard input, an existing path is an edge-list
// file, otherwise a generator spec such as petersen or cycle:5.
Graph load_graph(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str()).with_label("stdin");
  }
  if (std::filesystem::exists(arg)) {
    std::ifstream file(arg);
    if (!file) throw ParameterError("cannot read graph file '" + arg + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    return parse_edge_list(buf.str()).with_label(std::filesystem::path(arg).filename().string());
  }
  try {
    return graph_from_spec(arg);
  } catch (const ParameterError&) {
    throw ParameterError("graph file '" + arg + "' not found (and not a generator spec)");
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ParameterError("cannot write '" + out_path + "'");
  f << text;
}

AlphaPoint resolve_alpha(const std::string& alpha, const std::string& exact) {
  if (!exact.empty()) {
    auto a = parse_alpha(exact.find('/') == std::string::npos ? exact + "/1" : exact);
    return a;
  }
  return parse_alpha(alpha);
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void print_spectrum_text(const Spectrum& s, std::ostream& out) {
  out << "# " << s.size() << " eigenvalues (value multiplicity)\n";
  for (const auto& [v, m] : s.groups) out << num(v) << ' ' << m << '\n';
  out << "# sum " << num(s.sum()) << '\n';
}

void print_report_text(const VerificationReport& r, std::ostream& out) {
  for (const auto& c : r.cases) {
    out << std::left << std::setw(8) << status_name(c.status) << std::setw(30) << c.label << " alpha=" << std::setw(6)
        << c.alpha << " dev=" << std::scientific << std::setprecision(2) << c.deviation << std::defaultfloat;
    if (!c.notes.empty()) out << "  " << c.notes;
    out << '\n';
  }
  for (const auto& d : r.discrepancies) {
    out << "[discrepancy] " << d.id << ": " << (d.consistent ? "consistent" : "INCONSISTENT") << " (worst "
        << std::scientific << std::setprecision(2) << d.worst_deviation << std::defaultfloat << ")\n"
        << "  tested:  " << d.expression << "\n"
        << "  against: " << d.reference << "\n"
        << "  finding: " << d.finding << '\n';
  }
  const auto s = r.summary();
  out << "summary: " << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped; worst deviation "
      << std::scientific << std::setprecision(3) << s.worst_deviation << std::defaultfloat << '\n';
}

void print_report(const VerificationReport& r, bool json, bool csv, std::ostream& out) {
  if (json)
    out << to_json(r, 2) << '\n';
  else if (csv)
    out << to_csv(r);
  else
    print_report_text(r, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"A_alpha spectra of central graphs and central vertex joins", "aalpha"};
  app.require_subcommand(1);

  // generate
  std::string family, out_path;
  std::vector<long> params;
  auto* gen = app.add_subcommand("generate", "emit a catalog graph as an edge list");
  gen->add_option("family", family, "complete|complete_bipartite|cycle|path|petersen|shrikhande|rook4x4")->required();
  gen->add_option("params", params, "integer parameters");
  gen->add_option("--out", out_path, "write to file instead of stdout");

  // spectrum / charpoly / energy
  std::string graph_arg, alpha_text, exact_text;
  bool json = false;
  auto* spec = app.add_subcommand("spectrum", "A_alpha spectrum from the dense eigensolver");
  spec->add_option("graph", graph_arg, "edge-list file, '-' or generator spec")->required();
  auto* spec_alpha = spec->add_option("--alpha", alpha_text, "alpha as decimal or p/q");
  spec->add_option("--exact", exact_text, "alpha as exact fraction p/q")->excludes(spec_alpha);
  spec->add_flag("--json", json, "JSON output");

  auto* cp = app.add_subcommand("charpoly", "characteristic polynomial of A_alpha (ascending coefficients)");
  cp->add_option("graph", graph_arg)->required();
  auto* cp_alpha = cp->add_option("--alpha", alpha_text, "alpha as decimal or p/q");
  cp->add_option("--exact", exact_text, "alpha as exact fraction p/q (exact rational coefficients)")->excludes(cp_alpha);
  cp->add_flag("--json", json, "JSON output");

  auto* en = app.add_subcommand("energy", "A_alpha energy, 0 <= alpha < 1");
  en->add_option("graph", graph_arg)->required();
  en->add_option("--alpha", alpha_text, "alpha as decimal or p/q")->required();

  // constructions
  std::string g1_arg, g2_arg, h_arg;
  auto* cen = app.add_subcommand("central", "emit the central graph C(G)");
  cen->add_option("graph", graph_arg)->required();
  cen->add_option("--out", out_path);

  auto* cvj = app.add_subcommand("cvjoin", "emit the central vertex join of G1 and G2");
  cvj->add_option("g1", g1_arg)->required();
  cvj->add_option("g2", g2_arg)->required();
  cvj->add_option("--out", out_path);

  // closed forms
  std::string kind;
  std::vector<std::string> graphs;
  std::vector<std::size_t> kpq;
  auto* cs = app.add_subcommand("closed-spectrum", "closed-form spectrum with factor provenance");
  cs->add_option("kind", kind, "central|cvjoin")->required()->check(CLI::IsMember({"central", "cvjoin"}));
  cs->add_option("graphs", graphs, "G (central) or G1 [G2] (cvjoin)")->required();
  cs->add_option("--alpha", alpha_text, "alpha as decimal or p/q")->required();
  cs->add_option("--kpq", kpq, "use K_{p,q} as the second graph: --kpq p,q")->delimiter(',')->expected(2);
  cs->add_flag("--json", json, "JSON output");

  // verification
  std::string catalog_path, grid_text = "0,1/4,1/2,3/4,1";
  bool csv = false, no_ledger = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* ver = app.add_subcommand("verify", "sweep closed forms against the oracle");
  ver->add_option("--catalog", catalog_path, "catalog file (default: built-in catalog)");
  ver->add_option("--grid", grid_text, "comma separated alpha list");
  ver->add_option("--threads", threads, "worker threads");
  ver->add_flag("--json", json, "JSON report");
  ver->add_flag("--csv", csv, "CSV table");
  ver->add_flag("--no-discrepancies", no_ledger, "skip the alternate-expression ledger");

  auto* cos = app.add_subcommand("cospectral", "certify G1 cvj H and G2 cvj H as A_alpha-cospectral");
  cos->add_option("g1", g1_arg)->required();
  cos->add_option("g2", g2_arg)->required();
  cos->add_option("third", h_arg, "common second graph H")->required();
  cos->add_option("--grid", grid_text, "comma separated alpha list");
  cos->add_flag("--json", json, "JSON report");
  cos->add_flag("--csv", csv, "CSV table");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return ExitCode::usage;
  }
  if ((*spec || *cp) && alpha_text.empty() && exact_text.empty()) {
    err << "error: one of --alpha or --exact is required\n\n" << (*spec ? spec : cp)->help();
    return ExitCode::usage;
  }

  try {
    if (*gen) {
      emit(to_edge_list(generate(parse_family(family), params)), out_path, out);
    } else if (*spec) {
      const Graph g = load_graph(graph_arg, in);
      const auto alpha = resolve_alpha(alpha_text, exact_text);
      const auto s = eigenvalues_sym(a_alpha_matrix(g, alpha.value));
      if (json)
        out << to_json(s) << '\n';
      else
        print_spectrum_text(s, out);
    } else if (*cp) {
      const Graph g = load_graph(graph_arg, in);
      const auto alpha = resolve_alpha(alpha_text, exact_text);
      if (alpha.exact) {
        const auto p = char_poly(a_alpha_matrix(g, *alpha.exact));
        if (json) {
          out << to_json(p) << '\n';
        } else {
          for (std::size_t k = 0; k < p.coeffs().size(); ++k) out << k << ' ' << to_string(p.coeffs()[k]) << '\n';
        }
      } else {
        const auto p = char_poly(a_alpha_matrix(g, alpha.value));
        if (json) {
          out << to_json(p) << '\n';
        } else {
          for (std::size_t k = 0; k < p.coeffs().size(); ++k) out << k << ' ' << num(p.coeffs()[k]) << '\n';
        }
      }
    } else if (*en) {
      const Graph g = load_graph(graph_arg, in);
      out << num(a_alpha_energy(g, parse_alpha(alpha_text).value)) << '\n';
    } else if (*cen) {
      emit(to_edge_list(central_graph(load_graph(graph_arg, in))), out_path, out);
    } else if (*cvj) {
      if (g1_arg == "-" && g2_arg == "-") throw ParameterError("only one graph argument may be '-'");
      emit(to_edge_list(central_vertex_join(load_graph(g1_arg, in), load_graph(g2_arg, in))), out_path, out);
    } else if (*cs) {
      const double alpha = parse_alpha(alpha_text).value;
      FactoredCharPoly f;
      if (kind == "central") {
        if (graphs.size() != 1) throw ParameterError("closed-spectrum central takes exactly one graph");
        f = charpoly_central_regular(load_graph(graphs[0], in), alpha);
      } else {
        const Graph g1 = load_graph(graphs.at(0), in);
        if (!kpq.empty()) {
          if (graphs.size() != 1) throw ParameterError("closed-spectrum cvjoin --kpq takes exactly one graph");
          if (kpq[0] < 1 || kpq[1] < 1) throw ParameterError("--kpq p,q needs p, q >= 1");
          f = charpoly_cvjoin(g1, SecondGraph::kpq(kpq[0], kpq[1]), alpha);
        } else {
          if (graphs.size() != 2) throw ParameterError("closed-spectrum cvjoin takes G1 and G2 (or G1 --kpq p,q)");
          const Graph g2 = load_graph(graphs[1], in);
          if (regularity(g2)) {
            if (!is_connected(g2)) throw PreconditionError("second graph is regular but not connected");
            f = charpoly_cvjoin(g1, SecondGraph::regular(g2), alpha);
          } else if (const auto parts = complete_bipartite_parts(g2)) {
            f = charpoly_cvjoin(g1, SecondGraph::kpq(parts->first, parts->second), alpha);
          } else {
            throw PreconditionError(
                "second graph is neither regular nor complete bipartite; no fully factored spectrum "
                "(use 'spectrum' on the explicit join)");
          }
        }
      }
      const auto s = spectrum_from_factors(f);
      if (json) {
        out << "{\"factorization\":" << to_json(f) << ",\"spectrum\":" << to_json(s) << "}\n";
      } else {
        out << "# (x - " << num(f.linear.root) << ")^" << f.linear.multiplicity << "  [2 alpha linear factor]\n";
        for (const auto& factor : f.factors) {
          out << "# [" << factor.label << "] mult=" << factor.multiplicity << " coeffs=";
          for (double c : factor.poly.coeffs()) out << num(c) << ' ';
          out << '\n';
        }
        print_spectrum_text(s, out);
      }
    } else if (*ver) {
      std::vector<CatalogEntry> catalog;
      if (catalog_path.empty()) {
        catalog = default_catalog();
      } else {
        std::ifstream f(catalog_path);
        if (!f) throw ParameterError("catalog file '" + catalog_path + "' not found");
        std::stringstream buf;
        buf << f.rdbuf();
        catalog = parse_catalog(buf.str());
      }
      auto report = sweep(catalog, parse_alpha_grid(grid_text), SweepOptions{threads});
      if (!no_ledger) report.discrepancies = analyze_discrepancies();
      print_report(report, json, csv, out);
      return report.ok() ? ExitCode::ok : ExitCode::verification_failed;
    } else if (*cos) {
      const auto report = cospectral_cvjoin_family(load_graph(g1_arg, in), load_graph(g2_arg, in),
                                                   load_graph(h_arg, in), parse_alpha_grid(grid_text));
      print_report(report, json, csv, out);
      return report.ok() ? ExitCode::ok : ExitCode::verification_failed;
    }
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return ExitCode::precondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::precondition;
  }
  return ExitCode::ok;
}

}  // namespace aalpha::cli
