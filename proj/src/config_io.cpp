#include "srsim/config_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "srsim/csv.hpp"
#include "srsim/errors.hpp"

namespace srsim {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

struct Line {
  int number;
  std::string key;
  std::string value;
};

[[noreturn]] void fail(std::string_view source, int line,
                       const std::string& what) {
  throw ConfigError(std::string(source) + ":" + std::to_string(line) + ": " +
                    what);
}

std::vector<Line> tokenize(std::string_view text, std::string_view source) {
  std::vector<Line> lines;
  std::set<std::string> seen;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++number;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    const size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;

    const size_t eq = raw.find('=');
    if (eq == std::string_view::npos)
      fail(source, number, "malformed line (expected 'key = value')");
    const std::string key{trim(raw.substr(0, eq))};
    const std::string value{trim(raw.substr(eq + 1))};
    if (key.empty() || value.empty())
      fail(source, number, "malformed line (empty key or value)");
    if (!seen.insert(key).second)
      fail(source, number, "duplicate key '" + key + "'");
    lines.push_back({number, key, value});
  }
  return lines;
}

double parse_double(const Line& ln, std::string_view source) {
  double v = 0.0;
  const char* first = ln.value.data();
  const char* last = first + ln.value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    fail(source, ln.number, "invalid number for '" + ln.key + "'");
  return v;
}

int parse_int(const Line& ln, std::string_view source) {
  int v = 0;
  const char* first = ln.value.data();
  const char* last = first + ln.value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    fail(source, ln.number, "invalid integer for '" + ln.key + "'");
  return v;
}

std::vector<double> parse_double_list(const Line& ln,
                                      std::string_view source) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(ln.value);
  // comma- and/or whitespace-separated
  while (std::getline(ss, item, ',')) {
    std::stringstream inner(item);
    std::string tok;
    while (inner >> tok) {
      double v = 0.0;
      const char* first = tok.data();
      const char* last = first + tok.size();
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || ptr != last)
        fail(source, ln.number, "invalid number '" + tok + "' in '" +
                                    ln.key + "'");
      out.push_back(v);
    }
  }
  if (out.empty()) fail(source, ln.number, "empty list for '" + ln.key + "'");
  return out;
}

struct SweepKeys {
  bool want = false;  // accept sweep.* keys at all
  bool have_axis = false;
  SweepAxis axis = SweepAxis::phi0;
  std::vector<double> values;
  int parallelism = 1;
};

SimConfig parse_common(std::string_view text, std::string_view source,
                       std::vector<std::string>* warnings, SweepKeys* sweep) {
  SimConfig cfg = make_default_config();
  double xi_max = cfg.grid.xi_max();
  int n_points = cfg.grid.n_points();

  for (const Line& ln : tokenize(text, source)) {
    const std::string& k = ln.key;
    if (k == "grid.xi_max") {
      xi_max = parse_double(ln, source);
    } else if (k == "grid.n_points") {
      n_points = parse_int(ln, source);
    } else if (k == "pump.chi0") {
      cfg.pump.chi0 = parse_double(ln, source);
    } else if (k == "pump.phi0") {
      cfg.pump.phi0 = parse_double(ln, source);
    } else if (k == "sim.total_atoms") {
      cfg.total_atoms = parse_double(ln, source);
    } else if (k == "sim.seed_forward") {
      cfg.seed_forward = parse_double(ln, source);
    } else if (k == "sim.seed_backward") {
      cfg.seed_backward = parse_double(ln, source);
    } else if (k == "sim.seed_phase") {
      cfg.seed_phase = parse_double(ln, source);
    } else if (k == "sim.tau_end") {
      cfg.tau_end = parse_double(ln, source);
    } else if (k == "sim.dtau") {
      cfg.dtau = parse_double(ln, source);
    } else if (k == "sim.tf_half_length_xi") {
      cfg.tf_half_length_xi = parse_double(ln, source);
    } else if (sweep && sweep->want && k == "sweep.axis") {
      auto axis = axis_from_name(ln.value);
      if (!axis)
        fail(source, ln.number,
             "invalid sweep.axis '" + ln.value +
                 "' (expected phi0, coupling, seed or duration)");
      sweep->axis = *axis;
      sweep->have_axis = true;
    } else if (sweep && sweep->want && k == "sweep.values") {
      sweep->values = parse_double_list(ln, source);
    } else if (sweep && sweep->want && k == "sweep.parallelism") {
      sweep->parallelism = parse_int(ln, source);
    } else {
      fail(source, ln.number, "unknown key '" + k + "'");
    }
  }

  try {
    cfg.grid = SpatialGrid::symmetric(xi_max, n_points);
    std::vector<std::string> w = validate(cfg);
    if (warnings) *warnings = std::move(w);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(source) + ": " + e.what());
  }
  return cfg;
}

}  // namespace

SimConfig parse_sim_config_text(std::string_view text,
                                std::string_view source_name,
                                std::vector<std::string>* warnings) {
  return parse_common(text, source_name, warnings, nullptr);
}

SweepSpec parse_sweep_spec_text(std::string_view text,
                                std::string_view source_name,
                                std::vector<std::string>* warnings) {
  SweepKeys keys;
  keys.want = true;
  SweepSpec spec;
  spec.base = parse_common(text, source_name, warnings, &keys);
  if (!keys.have_axis)
    throw ConfigError(std::string(source_name) + ": sweep.axis is required");
  if (keys.values.empty())
    throw ConfigError(std::string(source_name) + ": sweep.values is required");
  spec.axis = keys.axis;
  spec.values = std::move(keys.values);
  spec.parallelism = keys.parallelism;
  try {
    validate_sweep_spec(spec);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(source_name) + ": " + e.what());
  }
  return spec;
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw IoError("failed while reading " + path.string());
  return ss.str();
}

}  // namespace

SimConfig parse_sim_config(const std::filesystem::path& path,
                           std::vector<std::string>* warnings) {
  return parse_sim_config_text(slurp(path), path.string(), warnings);
}

SweepSpec parse_sweep_spec(const std::filesystem::path& path,
                           std::vector<std::string>* warnings) {
  return parse_sweep_spec_text(slurp(path), path.string(), warnings);
}

std::string serialize_config(const SimConfig& cfg) {
  std::string out;
  out += "grid.xi_max = " + csv_number(cfg.grid.xi_max()) + "\n";
  out += "grid.n_points = " + std::to_string(cfg.grid.n_points()) + "\n";
  out += "pump.chi0 = " + csv_number(cfg.pump.chi0) + "\n";
  out += "pump.phi0 = " + csv_number(cfg.pump.phi0) + "\n";
  out += "sim.total_atoms = " + csv_number(cfg.total_atoms) + "\n";
  out += "sim.seed_forward = " + csv_number(cfg.seed_forward) + "\n";
  out += "sim.seed_backward = " + csv_number(cfg.seed_backward) + "\n";
  out += "sim.seed_phase = " + csv_number(cfg.seed_phase) + "\n";
  out += "sim.tau_end = " + csv_number(cfg.tau_end) + "\n";
  out += "sim.dtau = " + csv_number(cfg.dtau) + "\n";
  out += "sim.tf_half_length_xi = " + csv_number(cfg.tf_half_length_xi) +
         "\n";
  return out;
}

}  // namespace srsim
