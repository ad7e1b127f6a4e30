#ifndef SRSIM_CONFIG_IO_HPP
#define SRSIM_CONFIG_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "srsim/config.hpp"
#include "srsim/sweep.hpp"

namespace srsim {

// Flat key = value configuration, '#' comments, dotted section prefixes
// (grid., pump., sim., sweep.). Unknown keys, duplicate keys, malformed
// lines and out-of-range values are ConfigErrors that name the offending
// line. parse_sim_config rejects sweep.* keys.
SimConfig parse_sim_config_text(std::string_view text,
                                std::string_view source_name = "<config>",
                                std::vector<std::string>* warnings = nullptr);
SimConfig parse_sim_config(const std::filesystem::path& path,
                           std::vector<std::string>* warnings = nullptr);

// Accepts every sim key plus sweep.axis (required), sweep.values (required)
// and sweep.parallelism.
SweepSpec parse_sweep_spec_text(std::string_view text,
                                std::string_view source_name = "<config>",
                                std::vector<std::string>* warnings = nullptr);
SweepSpec parse_sweep_spec(const std::filesystem::path& path,
                           std::vector<std::string>* warnings = nullptr);

// Emits every sim key; parse_sim_config_text round-trips it.
std::string serialize_config(const SimConfig& cfg);

}  // namespace srsim

#endif
