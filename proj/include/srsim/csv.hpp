#ifndef SRSIM_CSV_HPP
#define SRSIM_CSV_HPP

#include <filesystem>
#include <string>

#include "srsim/analysis.hpp"
#include "srsim/solver.hpp"

namespace srsim {

// Shortest round-trippable decimal representation ("%.17g").
std::string csv_number(double v);

// Header: tau,N00,N11,Nm1m1,total,C01_abs,C01_arg,Cm10_abs
std::string trajectory_csv(const Trajectory& t);

// key = value report of a phase-response fit.
std::string fit_report_text(const PhaseFit& fit);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace srsim

#endif
