// Shared helpers for the command-line tool: config-file handling, value
// parsing (angles as pi fractions, initial states, regimes) and the CSV /
// SVG / JSON writers.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qedsat/dynamics.hpp"
#include "qedsat/entanglement.hpp"
#include "qedsat/types.hpp"

namespace qedsat::cli {

// Flat key/value view of an INI-style config file; section names prefix
// nothing (all sections share one namespace, keys match flag names).
std::map<std::string, std::string> read_config_file(const std::string& path);

// Parsing helpers; every failure throws ConfigError naming the field.
double parse_angle(const std::string& text, const std::string& field);
Regime parse_regime(const std::string& text, const std::string& field);
ProcessKind parse_process(const std::string& text, const std::string& field);
PureTwoQubitState parse_initial(const std::string& text, const std::string& field);
long parse_integer(const std::string& text, const std::string& field);
std::vector<double> parse_grid_values(const std::string& text, const std::string& field);

std::string format_double(double v);  // 17 significant digits

void write_trajectory_csv(const std::string& path, const Trajectory& trajectory);
void write_schedule_csv(const std::string& path,
                        const std::vector<std::pair<double, int>>& realized);
void write_concurrence_svg(const std::string& path, const Trajectory& trajectory,
                           const std::string& title);

}  // namespace qedsat::cli
