#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hydrogen1d/analytic_core.hpp"
#include "hydrogen1d/extension_solver.hpp"
#include "hydrogen1d/verification.hpp"

namespace hydrogen1d {

using json = nlohmann::json;

/// Rounds to 12 significant digits, the precision of all emitted numbers.
double round12(double v);
/// "{:.12g}"; non-finite values print as inf, -inf, nan.
std::string format12(double v);

/// Finite values become rounded numbers, others the strings "inf"/"-inf"/"nan".
json number_json(double v);
double number_from_json(const json& j);

json to_json(const CheckResult& c);
json to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);

json to_json(const ExtensionParams& p);
json to_json(const GridSpec& g);
json to_json(const SpectrumResult& s);
SpectrumResult spectrum_from_json(const json& j);

json to_json(const WavefunctionSample& s);
WavefunctionSample sample_from_json(const json& j);

/// Rows of a CSV table with header; cells are written verbatim.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

/// abscissa,re,im
std::string to_csv(const WavefunctionSample& s);
/// energy,multiplicity,parity
std::string to_csv(const SpectrumResult& s);
/// name,measured,tolerance,passed,detail
std::string to_csv(const VerificationReport& r);

}  // namespace hydrogen1d
