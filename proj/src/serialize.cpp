#include "hydrogen1d/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>

namespace hydrogen1d {

std::string format12(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // also folds -0
  return fmt::format("{:.12g}", v);
}

double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  // from_chars, unlike stod, accepts subnormal results
  const auto text = fmt::format("{:.12g}", v);
  double out = v;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

json number_json(double v) {
  if (std::isfinite(v)) return round12(v);
  return format12(v);
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  if (s == "nan") return NAN;
  throw std::invalid_argument("not a number: " + s);
}

json to_json(const CheckResult& c) {
  return {{"name", c.name},
          {"measured", number_json(c.measured)},
          {"tolerance", number_json(c.tolerance)},
          {"passed", c.passed},
          {"detail", c.detail}};
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"checks", checks}, {"all_passed", r.all_passed}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  for (const auto& c : j.at("checks")) {
    CheckResult x;
    x.name = c.at("name").get<std::string>();
    x.measured = number_from_json(c.at("measured"));
    x.tolerance = number_from_json(c.at("tolerance"));
    x.passed = c.at("passed").get<bool>();
    x.detail = c.at("detail").get<std::string>();
    r.checks.push_back(std::move(x));
  }
  r.all_passed = j.at("all_passed").get<bool>();
  return r;
}

json to_json(const ExtensionParams& p) {
  if (p.variant == ExtensionParams::Variant::dirichlet) return {{"variant", "dirichlet"}};
  return {{"variant", "rotation"}, {"theta", number_json(p.theta)}};
}

json to_json(const GridSpec& g) {
  return {{"halfwidth_L", number_json(g.halfwidth_L)},
          {"epsilon", number_json(g.epsilon)},
          {"step", number_json(g.step)},
          {"max_step", number_json(g.max_step)},
          {"value_mode", g.value_mode == BoundaryValueMode::frobenius ? "frobenius" : "raw"}};
}

namespace {

json level_json(const SpectrumLevel& l) {
  return {{"energy", number_json(l.energy)},
          {"multiplicity", l.multiplicity},
          {"parity", to_string(l.parity)},
          {"regularity_defect", number_json(l.regularity_defect)}};
}

SpectrumLevel level_from_json(const json& j) {
  SpectrumLevel l;
  l.energy = number_from_json(j.at("energy"));
  l.multiplicity = j.at("multiplicity").get<int>();
  l.parity = parity_from_string(j.at("parity").get<std::string>());
  l.regularity_defect = j.contains("regularity_defect") ? number_from_json(j["regularity_defect"]) : 0.0;
  return l;
}

}  // namespace

json to_json(const SpectrumResult& s) {
  json levels = json::array(), rejected = json::array();
  for (const auto& l : s.levels) levels.push_back(level_json(l));
  for (const auto& l : s.rejected) rejected.push_back(level_json(l));
  return {{"levels", levels}, {"rejected", rejected}, {"params", to_json(s.params)}, {"grid", to_json(s.grid)}};
}

SpectrumResult spectrum_from_json(const json& j) {
  SpectrumResult s;
  for (const auto& l : j.at("levels")) s.levels.push_back(level_from_json(l));
  if (j.contains("rejected"))
    for (const auto& l : j["rejected"]) s.rejected.push_back(level_from_json(l));
  const auto& p = j.at("params");
  s.params = p.at("variant") == "dirichlet" ? ExtensionParams::dirichlet()
                                             : ExtensionParams::rotation(number_from_json(p.at("theta")));
  const auto& g = j.at("grid");
  s.grid.halfwidth_L = number_from_json(g.at("halfwidth_L"));
  s.grid.epsilon = number_from_json(g.at("epsilon"));
  s.grid.step = number_from_json(g.at("step"));
  s.grid.max_step = number_from_json(g.at("max_step"));
  s.grid.value_mode = g.at("value_mode") == "raw" ? BoundaryValueMode::raw : BoundaryValueMode::frobenius;
  return s;
}

json to_json(const WavefunctionSample& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    rows.push_back({number_json(s.abscissae[i]), number_json(s.values[i].real()),
                    number_json(s.values[i].imag())});
  return {{"space", to_string(s.space)}, {"columns", {"abscissa", "re", "im"}}, {"rows", rows}};
}

WavefunctionSample sample_from_json(const json& j) {
  WavefunctionSample s;
  s.space = space_from_string(j.at("space").get<std::string>());
  for (const auto& r : j.at("rows")) {
    s.abscissae.push_back(number_from_json(r.at(0)));
    s.values.emplace_back(number_from_json(r.at(1)), number_from_json(r.at(2)));
  }
  s.validate();
  return s;
}

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cells[i]);
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

std::string to_csv(const WavefunctionSample& s) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < s.size(); ++i)
    rows.push_back({format12(s.abscissae[i]), format12(s.values[i].real()), format12(s.values[i].imag())});
  return csv_table({"abscissa", "re", "im"}, rows);
}

std::string to_csv(const SpectrumResult& s) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& l : s.levels)
    rows.push_back({format12(l.energy), std::to_string(l.multiplicity), to_string(l.parity)});
  return csv_table({"energy", "multiplicity", "parity"}, rows);
}

std::string to_csv(const VerificationReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.checks)
    rows.push_back({c.name, format12(c.measured), format12(c.tolerance), c.passed ? "true" : "false", c.detail});
  return csv_table({"name", "measured", "tolerance", "passed", "detail"}, rows);
}

}  // namespace hydrogen1d
