#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aalpha/closedform.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/polynomial.hpp"
#include "aalpha/rational.hpp"
#include "aalpha/spectra.hpp"

namespace aalpha {

// A grid point: always a double, plus the exact value when it was given as
// a fraction (or as a dyadic grid constant) and exact certificates apply.
struct AlphaPoint {
  double value = 0.0;
  std::optional<Rational> exact;

  static AlphaPoint exact_value(const Rational& q) { return {q.get_d(), q}; }
  static AlphaPoint numeric(double v) { return {v, std::nullopt}; }
  std::string text() const;
};

// "p/q" and integers yield exact points; a decimal yields a numeric one.
AlphaPoint parse_alpha(const std::string& text);
// Comma separated list of parse_alpha items.
std::vector<AlphaPoint> parse_alpha_grid(const std::string& text);
// {0, 1/4, 1/2, 3/4, 1}, all exact.
std::vector<AlphaPoint> default_alpha_grid();

enum class CaseStatus { pass, fail, skipped };
std::string_view status_name(CaseStatus s);

struct CaseResult {
  std::string label;
  std::string source;  // which closed form was checked
  std::string alpha;
  CaseStatus status = CaseStatus::skipped;
  double deviation = 0.0;
  std::size_t order = 0;
  std::vector<double> closed_form;
  std::vector<double> oracle;
  std::string notes;
};

// Outcome of testing one alternate published expression against the oracle.
struct DiscrepancyEntry {
  std::string id;
  std::string expression;  // what was tested
  std::string reference;   // what it was compared with
  std::vector<std::string> cases;
  double worst_deviation = 0.0;
  bool consistent = false;
  std::string finding;
};

struct ReportSummary {
  std::size_t passed = 0, failed = 0, skipped = 0;
  double worst_deviation = 0.0;
};

struct VerificationReport {
  std::vector<CaseResult> cases;
  std::vector<DiscrepancyEntry> discrepancies;

  ReportSummary summary() const;
  bool ok() const { return summary().failed == 0; }
};

// ---- sweeps ----------------------------------------------------------------------

struct CatalogEntry {
  enum class Kind { central, cvjoin, cvjoin_kpq };
  Kind kind = Kind::central;
  Graph g1;
  std::optional<Graph> g2;
  std::size_t p = 0, q = 0;

  static CatalogEntry central(Graph g) { return {Kind::central, std::move(g), std::nullopt, 0, 0}; }
  static CatalogEntry cvjoin(Graph g1, Graph g2) { return {Kind::cvjoin, std::move(g1), std::move(g2), 0, 0}; }
  static CatalogEntry kpq(Graph g1, std::size_t p, std::size_t q) {
    return {Kind::cvjoin_kpq, std::move(g1), std::nullopt, p, q};
  }
  std::string label() const;
};

// Every closed form family at desk scale:
//   central: K_3..K_7, C_4..C_8, Petersen
//   cvjoin:  {K_3, C_4, C_6, Petersen} x {K_2, K_3, C_5}
//   kpq:     {C_4, Petersen} x {(1,1), (2,3), (3,3)}
std::vector<CatalogEntry> default_catalog();

// Text catalog, one entry per line ('#' starts a comment):
//   central <graph>
//   cvjoin <graph> <graph>
//   kpq <graph> <p> <q>
// where <graph> is a generator spec such as petersen, cycle:5,
// complete_bipartite:2,3 or a path to an edge-list file.
std::vector<CatalogEntry> parse_catalog(const std::string& text);
Graph graph_from_spec(const std::string& spec);

struct SweepOptions {
  unsigned threads = 1;
};

// Per case: deviation = max over sorted positions of |closed form - oracle|,
// pass iff <= tol::match. Entries failing the closed-form preconditions are
// reported as skipped with the reason.
VerificationReport sweep(const std::vector<CatalogEntry>& catalog, const std::vector<AlphaPoint>& grid,
                         const SweepOptions& options = {});

// ---- cospectrality -----------------------------------------------------------------

// Same length and per-position gap <= tol after descending sort.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol);
// Exact mode: identical characteristic polynomials.
inline bool spectra_equal(const PolyQ& a, const PolyQ& b) { return a == b; }

// Builds G1 cvj H and G2 cvj H explicitly and compares their A_alpha
// spectra at every grid point (numeric, tol::match); exact grid points also
// get an exact characteristic-polynomial certificate. Throws
// PreconditionError unless G1 and G2 are regular and A-cospectral.
VerificationReport cospectral_cvjoin_family(const Graph& g1, const Graph& g2, const Graph& h,
                                            const std::vector<AlphaPoint>& grid);

// Coronal equality of A_alpha(H1) and A_alpha(H2) at the sample points that
// are not within tol::sing of an eigenvalue of either matrix; true iff all
// agree within tol::num. Throws SingularityError when no sample survives.
bool coronal_equal_check(const Graph& h1, const Graph& h2, double alpha, const std::vector<double>& samples);

// 2n + 1 sample points avoiding the spectrum of m (n = order of m).
std::vector<double> coronal_sample_points(const SymMatrix<double>& m);

// Alternate expressions for the same spectra (closed-form root formulas,
// coronal weight (1-a) instead of (1-a)^2, the K_{p,q} root count), each
// evaluated against the oracle.
std::vector<DiscrepancyEntry> analyze_discrepancies();

}  // namespace aalpha
