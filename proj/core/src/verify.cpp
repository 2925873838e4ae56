#include "aalpha/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "aalpha/construct.hpp"
#include "aalpha/exact.hpp"

namespace aalpha {

std::string AlphaPoint::text() const {
  if (exact) return to_string(*exact);
  // shortest text that round-trips
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

AlphaPoint parse_alpha(const std::string& text) {
  const bool integral = !text.empty() && text.find_first_not_of("0123456789") == std::string::npos;
  if (integral || text.find('/') != std::string::npos) {
    const Rational q = parse_rational(text);
    if (q < 0 || q > 1) throw DomainError("alpha must lie in [0, 1], got " + text);
    return AlphaPoint::exact_value(q);
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed alpha '" + text + "'");
  }
  if (used != text.size()) throw DomainError("malformed alpha '" + text + "'");
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("alpha must lie in [0, 1], got " + text);
  return AlphaPoint::numeric(v);
}

std::vector<AlphaPoint> parse_alpha_grid(const std::string& text) {
  std::vector<AlphaPoint> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) grid.push_back(parse_alpha(item));
  return grid;
}

std::vector<AlphaPoint> default_alpha_grid() {
  std::vector<AlphaPoint> g;
  for (int k = 0; k <= 4; ++k) {
    Rational a(k, 4);
    a.canonicalize();
    g.push_back(AlphaPoint::exact_value(a));
  }
  return g;
}

std::string_view status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::skipped: return "skipped";
  }
  return "?";
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const auto& c : cases) {
    switch (c.status) {
      case CaseStatus::pass: ++s.passed; break;
      case CaseStatus::fail: ++s.failed; break;
      case CaseStatus::skipped: ++s.skipped; break;
    }
    if (c.status != CaseStatus::skipped) s.worst_deviation = std::max(s.worst_deviation, c.deviation);
  }
  return s;
}

// ---- catalog ----------------------------------------------------------------------

std::string CatalogEntry::label() const {
  switch (kind) {
    case Kind::central: return "C(" + g1.label() + ")";
    case Kind::cvjoin: return g1.label() + " cvj " + g2->label();
    case Kind::cvjoin_kpq:
      return g1.label() + " cvj K" + std::to_string(p) + "," + std::to_string(q);
  }
  return "?";
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> c;
  for (long n = 3; n <= 7; ++n) c.push_back(CatalogEntry::central(generate(Family::complete, {n})));
  for (long n = 4; n <= 8; ++n) c.push_back(CatalogEntry::central(generate(Family::cycle, {n})));
  c.push_back(CatalogEntry::central(generate(Family::petersen)));

  const std::vector<Graph> firsts = {generate(Family::complete, {3}), generate(Family::cycle, {4}),
                                     generate(Family::cycle, {6}), generate(Family::petersen)};
  const std::vector<Graph> seconds = {generate(Family::complete, {2}), generate(Family::complete, {3}),
                                      generate(Family::cycle, {5})};
  for (const auto& g1 : firsts)
    for (const auto& g2 : seconds) c.push_back(CatalogEntry::cvjoin(g1, g2));

  for (const auto& g1 : {generate(Family::cycle, {4}), generate(Family::petersen)})
    for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 3}, std::pair{3, 3}})
      c.push_back(CatalogEntry::kpq(g1, static_cast<std::size_t>(p), static_cast<std::size_t>(q)));
  return c;
}

Graph graph_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  Family family;
  try {
    family = parse_family(name);
  } catch (const ParameterError&) {
    std::ifstream in(spec);
    if (!in) throw ParameterError("cannot open graph file '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str()).with_label(spec);
  }
  std::vector<long> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        params.push_back(std::stol(item));
      } catch (const std::exception&) {
        throw ParameterError("bad generator parameter '" + item + "' in '" + spec + "'");
      }
    }
  }
  return generate(family, params);
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::stringstream ss(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::stringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "central" && tok.size() == 2) {
        out.push_back(CatalogEntry::central(graph_from_spec(tok[1])));
      } else if (tok[0] == "cvjoin" && tok.size() == 3) {
        out.push_back(CatalogEntry::cvjoin(graph_from_spec(tok[1]), graph_from_spec(tok[2])));
      } else if (tok[0] == "kpq" && tok.size() == 4) {
        const long p = std::stol(tok[2]), q = std::stol(tok[3]);
        if (p < 1 || q < 1) throw ParameterError("p and q must be >= 1");
        out.push_back(CatalogEntry::kpq(graph_from_spec(tok[1]), static_cast<std::size_t>(p),
                                        static_cast<std::size_t>(q)));
      } else {
        throw ParseError(line_no, "expected 'central G', 'cvjoin G1 G2' or 'kpq G p q'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

// ---- sweep -----------------------------------------------------------------------

namespace {

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

CaseResult run_case(const CatalogEntry& entry, const AlphaPoint& alpha) {
  using K = CatalogEntry::Kind;
  CaseResult r;
  r.label = entry.label();
  r.alpha = alpha.text();
  Graph explicit_graph = entry.g1;
  try {
    Spectrum closed;
    switch (entry.kind) {
      case K::central:
        r.source = "central-graph factorization";
        closed = spectrum_central_regular(entry.g1, alpha.value);
        explicit_graph = central_graph(entry.g1);
        break;
      case K::cvjoin:
        r.source = "join factorization, regular second graph (coronal cubic)";
        closed = spectrum_cvjoin_regular(entry.g1, *entry.g2, alpha.value);
        explicit_graph = central_vertex_join(entry.g1, *entry.g2);
        break;
      case K::cvjoin_kpq:
        r.source = "join factorization, K_{p,q} second graph (coronal quartic)";
        closed = spectrum_cvjoin_kpq(entry.g1, entry.p, entry.q, alpha.value);
        explicit_graph = central_vertex_join(entry.g1, generate(Family::complete_bipartite,
                                                                {static_cast<long>(entry.p), static_cast<long>(entry.q)}));
        break;
    }
    const auto oracle = eigenvalues_sym(a_alpha_matrix(explicit_graph, alpha.value));
    r.order = explicit_graph.order();
    r.closed_form = closed.values;
    r.oracle = oracle.values;
    r.deviation = max_gap(closed.values, oracle.values);
    r.status = r.deviation <= tol::match ? CaseStatus::pass : CaseStatus::fail;
  } catch (const PreconditionError& e) {
    r.status = CaseStatus::skipped;
    r.notes = e.what();
  } catch (const Error& e) {
    r.status = CaseStatus::fail;
    r.deviation = std::numeric_limits<double>::infinity();
    r.notes = e.what();
  }
  return r;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

VerificationReport sweep(const std::vector<CatalogEntry>& catalog, const std::vector<AlphaPoint>& grid,
                         const SweepOptions& options) {
  VerificationReport report;
  report.cases.resize(catalog.size() * grid.size());
  parallel_for(report.cases.size(), options.threads, [&](std::size_t k) {
    report.cases[k] = run_case(catalog[k / grid.size()], grid[k % grid.size()]);
  });
  return report;
}

// ---- cospectrality ---------------------------------------------------------------

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
  return max_gap(a.values, b.values) <= tol;
}

VerificationReport cospectral_cvjoin_family(const Graph& g1, const Graph& g2, const Graph& h,
                                            const std::vector<AlphaPoint>& grid) {
  if (!regularity(g1) || !regularity(g2))
    throw PreconditionError("cospectral family: seed graphs must be regular");
  const auto a1 = adjacency_sym<Rational>(g1);
  const auto a2 = adjacency_sym<Rational>(g2);
  if (g1.order() != g2.order() || exact_char_poly(a1) != exact_char_poly(a2))
    throw PreconditionError("cospectral family: seed graphs are not A-cospectral");

  const Graph j1 = central_vertex_join(g1, h);
  const Graph j2 = central_vertex_join(g2, h);

  std::ostringstream structural;
  auto d1 = j1.degrees(), d2 = j2.degrees();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  const bool counts = j1.order() == j2.order() && j1.size() == j2.size() && d1 == d2;
  structural << "n=" << j1.order() << " m=" << j1.size()
             << (counts ? "; vertex/edge counts and degree multisets agree" : "; STRUCTURAL MISMATCH");
  structural << (regularity(j1) || regularity(j2) ? "; regular join" : "; both joins non-regular");
  const bool seeds_differ = k4_profile(g1) != k4_profile(g2);
  const bool joins_differ = k4_profile(j1) != k4_profile(j2);
  if (seeds_differ)
    structural << (joins_differ ? "; non-isomorphic (K4 profiles differ in seeds and joins)"
                                : "; seeds non-isomorphic, join K4 profiles coincide");
  else
    structural << "; K4 profiles of seeds coincide (no non-isomorphism witness)";

  const std::string label = (g1.label().empty() ? "G1" : g1.label()) + " / " +
                            (g2.label().empty() ? "G2" : g2.label()) + " cvj " +
                            (h.label().empty() ? "H" : h.label());

  VerificationReport report;
  for (const auto& alpha : grid) {
    CaseResult r;
    r.label = label;
    r.source = "cospectral join family";
    r.alpha = alpha.text();
    r.order = j1.order();
    try {
      const auto s1 = eigenvalues_sym(a_alpha_matrix(j1, alpha.value));
      const auto s2 = eigenvalues_sym(a_alpha_matrix(j2, alpha.value));
      r.closed_form = s1.values;
      r.oracle = s2.values;
      r.deviation = max_gap(s1.values, s2.values);
      bool ok = counts && r.deviation <= tol::match;
      std::ostringstream tol_text;
      tol_text << tol::match;
      std::string cert = "numeric only (tol " + tol_text.str() + ")";
      if (alpha.exact) {
        const bool same = exact_char_poly(a_alpha_matrix(j1, *alpha.exact)) ==
                          exact_char_poly(a_alpha_matrix(j2, *alpha.exact));
        cert = same ? "exact: identical characteristic polynomials" : "exact: characteristic polynomials DIFFER";
        ok = ok && same;
      }
      r.status = ok ? CaseStatus::pass : CaseStatus::fail;
      r.notes = cert + "; " + structural.str();
    } catch (const Error& e) {
      r.status = CaseStatus::fail;
      r.notes = e.what();
    }
    report.cases.push_back(std::move(r));
  }
  return report;
}

std::vector<double> coronal_sample_points(const SymMatrix<double>& m) {
  const auto spec = eigenvalues_sym(m);
  const std::size_t want = 2 * m.order() + 1;
  const double lo = spec.values.empty() ? -1.0 : spec.values.back() - 2.0;
  const double hi = spec.values.empty() ? 1.0 : spec.values.front() + 2.0;
  const double step = (hi - lo) / static_cast<double>(want);
  std::vector<double> pts;
  auto far_from_spectrum = [&](double x) {
    for (double v : spec.values)
      if (std::abs(x - v) < 1e-3) return false;
    return true;
  };
  // irrational phase keeps samples off the (often integral) eigenvalues
  for (std::size_t k = 0; pts.size() < want; ++k) {
    const double x = lo + step * (static_cast<double>(k) + 0.3183098861837907);
    if (far_from_spectrum(x)) pts.push_back(x);
  }
  return pts;
}

bool coronal_equal_check(const Graph& h1, const Graph& h2, double alpha, const std::vector<double>& samples) {
  const auto m1 = a_alpha_matrix(h1, alpha);
  const auto m2 = a_alpha_matrix(h2, alpha);
  std::size_t used = 0;
  for (double x : samples) {
    double v1 = 0.0, v2 = 0.0;
    try {
      v1 = coronal_eval(m1, x);
      v2 = coronal_eval(m2, x);
    } catch (const SingularityError&) {
      continue;
    }
    ++used;
    if (std::abs(v1 - v2) > tol::num * std::max(1.0, std::abs(v1))) return false;
  }
  if (used == 0) throw SingularityError("coronal_equal_check: every sample point is a pole");
  return true;
}

}  // namespace aalpha
