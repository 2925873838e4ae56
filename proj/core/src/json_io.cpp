#include "aalpha/json_io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace aalpha {

namespace {

using nlohmann::json;

json coeffs_json(const PolyF& p) { return json{{"coeffs", p.coeffs()}}; }

// JSON has no infinity; an unbounded deviation is written as null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json spectrum_json(const Spectrum& s) {
  json groups = json::array();
  for (const auto& [v, m] : s.groups) groups.push_back(json::array({v, m}));
  return json{{"values", s.values}, {"groups", groups}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const Spectrum& s, int indent) { return spectrum_json(s).dump(indent); }

std::string to_json(const PolyF& p, int indent) { return coeffs_json(p).dump(indent); }

std::string to_json(const PolyQ& p, int indent) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(to_string(v));
  return json{{"coeffs", c}}.dump(indent);
}

std::string to_json(const FactoredCharPoly& f, int indent) {
  json factors = json::array();
  for (const auto& x : f.factors)
    factors.push_back({{"coeffs", x.poly.coeffs()}, {"mult", x.multiplicity}, {"label", x.label}});
  json j{{"linear", {{"root", f.linear.root}, {"mult", f.linear.multiplicity}}},
         {"factors", factors},
         {"order", f.order}};
  if (f.coronal)
    j["coronal"] = {{"n1", f.coronal->n1}, {"r1", f.coronal->r1}, {"alpha", f.coronal->alpha},
                    {"n2", f.coronal->second.order()}};
  return j.dump(indent);
}

std::string to_json(const VerificationReport& r, int indent) {
  json cases = json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"label", c.label},
                     {"source", c.source},
                     {"alpha", c.alpha},
                     {"status", std::string(status_name(c.status))},
                     {"deviation", finite_or_null(c.deviation)},
                     {"order", c.order},
                     {"closed_form", c.closed_form},
                     {"oracle", c.oracle},
                     {"notes", c.notes}});
  json disc = json::array();
  for (const auto& d : r.discrepancies)
    disc.push_back({{"id", d.id},
                    {"expression", d.expression},
                    {"reference", d.reference},
                    {"cases", d.cases},
                    {"worst_deviation", finite_or_null(d.worst_deviation)},
                    {"consistent", d.consistent},
                    {"finding", d.finding}});
  const auto s = r.summary();
  json summary{{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped},
               {"worst_deviation", finite_or_null(s.worst_deviation)}};
  return json{{"cases", cases}, {"discrepancies", disc}, {"summary", summary}}.dump(indent);
}

std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os.precision(6);
  os << "label,source,alpha,order,status,deviation,notes\n";
  for (const auto& c : r.cases)
    os << csv_field(c.label) << ',' << csv_field(c.source) << ',' << c.alpha << ',' << c.order << ','
       << status_name(c.status) << ',' << std::scientific << c.deviation << std::defaultfloat << ','
       << csv_field(c.notes) << '\n';
  return os.str();
}

}  // namespace aalpha
