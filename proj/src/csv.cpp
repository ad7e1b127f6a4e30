#include "srsim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "srsim/errors.hpp"

namespace srsim {

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trajectory_csv(const Trajectory& t) {
  std::string out = "tau,N00,N11,Nm1m1,total,C01_abs,C01_arg,Cm10_abs\n";
  for (size_t k = 0; k < t.taus.size(); ++k) {
    const PopulationSample& p = t.populations[k];
    const GratingDiagnostics& d = t.diagnostics[k];
    out += csv_number(t.taus[k]);
    out += ',';
    out += csv_number(p.n00);
    out += ',';
    out += csv_number(p.n11);
    out += ',';
    out += csv_number(p.nm1m1);
    out += ',';
    out += csv_number(p.total());
    out += ',';
    out += csv_number(std::abs(d.c01));
    out += ',';
    out += csv_number(std::arg(d.c01));
    out += ',';
    out += csv_number(std::abs(d.cm10));
    out += '\n';
  }
  return out;
}

std::string fit_report_text(const PhaseFit& fit) {
  std::string out;
  out += "n_points = " + std::to_string(fit.n_points) + "\n";
  out += "amplitude = " + csv_number(fit.amplitude) + "\n";
  out += "phase_offset = " + csv_number(fit.phase_offset) + "\n";
  out += "baseline = " + csv_number(fit.baseline) + "\n";
  out += "r_squared = " + csv_number(fit.r_squared) + "\n";
  out += "maximizer = " + csv_number(fit.maximizer) + "\n";
  out += "minimizer = " + csv_number(fit.minimizer) + "\n";
  out += std::string("degenerate = ") + (fit.degenerate ? "1" : "0") + "\n";
  return out;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec)
      throw IoError("cannot create directory " +
                    path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("failed while writing " + path.string());
}

}  // namespace srsim
