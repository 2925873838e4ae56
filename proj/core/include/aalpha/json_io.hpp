#pragma once

#include <string>

#include "aalpha/closedform.hpp"
#include "aalpha/polynomial.hpp"
#include "aalpha/spectra.hpp"
#include "aalpha/verify.hpp"

namespace aalpha {

// JSON shapes:
//   Spectrum          {"values":[...], "groups":[[value, mult], ...]}
//   Polynomial        {"coeffs":[c0, ..., cn]}   exact coefficients are "p/q" strings
//   FactoredCharPoly  {"linear":{"root":r,"mult":k},
//                      "factors":[{"coeffs":[...],"mult":k,"label":"..."}], "order":n}
//                     plus "coronal":{"n1":..,"r1":..,"alpha":..,"n2":..} for a generic second graph
//   VerificationReport {"cases":[...], "discrepancies":[...], "summary":{...}}
std::string to_json(const Spectrum& s, int indent = -1);
std::string to_json(const PolyF& p, int indent = -1);
std::string to_json(const PolyQ& p, int indent = -1);
std::string to_json(const FactoredCharPoly& f, int indent = -1);
std::string to_json(const VerificationReport& r, int indent = -1);

// One row per case: label,source,alpha,order,status,deviation,notes
std::string to_csv(const VerificationReport& r);

}  // namespace aalpha
